#include "fbr_cli/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fbr::cli {

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> hom_values(const FiberedRing& ring, int sub, int hom) {
  std::vector<int> v;
  for (Elem x : ring.lattice().at(sub).elements()) v.push_back(ring.homs(sub)[hom](x));
  return v;
}

nlohmann::json header_json(const FiberedRing& ring, const std::string& command) {
  return {{"command", command},
          {"group", ring.group().name()},
          {"order", ring.group().order()},
          {"n", ring.n()}};
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + s + "'");
}

void render(const std::vector<Report>& reports, Format format, std::ostream& out) {
  if (format == Format::Json) {
    if (reports.size() == 1) {
      out << reports.front().json.dump(2) << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(r.json);
      out << arr.dump(2) << '\n';
    }
    return;
  }
  bool first = true;
  for (const auto& r : reports) {
    if (!first) out << '\n';
    first = false;
    out << "# " << r.title << '\n';
    if (format == Format::Tsv) {
      for (std::size_t i = 0; i < r.header.size(); ++i) out << (i ? "\t" : "") << r.header[i];
      out << '\n';
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
        out << '\n';
      }
      continue;
    }
    std::vector<std::size_t> width(r.header.size(), 0);
    for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
    for (const auto& row : r.rows)
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += "  ";
        s += cells[i];
        if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
      }
      out << s << '\n';
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
  }
}

nlohmann::json cyc_json(const CycNum& c) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& q : c.coords()) coords.push_back(q.to_string());
  return {{"m", c.order()}, {"coords", coords}};
}

nlohmann::json element_json(const FBElement& x) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, c] : x.coeffs()) j[std::to_string(k)] = cyc_json(c);
  return j;
}

nlohmann::json pair_json(const FiberedRing& ring, int basis_index) {
  const auto& e = ring.basis()[basis_index];
  return {{"H", ring.lattice().at(e.pair.sub).elements()}, {"phi", hom_values(ring, e.pair.sub, e.pair.hom)}};
}

std::string pair_label(const FiberedRing& ring, int basis_index) {
  const auto& e = ring.basis()[basis_index];
  return "[{" + join_ints(ring.lattice().at(e.pair.sub).elements(), ',') + "},(" +
         join_ints(hom_values(ring, e.pair.sub, e.pair.hom), ',') + ")]";
}

std::string point_label(const FiberedRing& ring, int point) {
  const auto& p = ring.points()[point];
  return "({" + join_ints(ring.lattice().at(p.sub).elements(), ',') + "}," + std::to_string(p.h) + ")";
}

std::string cyc_cell(const CycNum& c, Format format) {
  return format == Format::Tsv ? c.coord_string() : c.to_string();
}

Report basis_report(const FiberedRing& ring) {
  Report r;
  r.title = "basis " + ring.group().name() + " n=" + std::to_string(ring.n());
  r.header = {"index", "order", "H", "phi", "stabilizer"};
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 0; j < ring.rank(); ++j) {
    const auto& e = ring.basis()[j];
    const auto& h = ring.lattice().at(e.pair.sub);
    r.rows.push_back({std::to_string(j), std::to_string(h.order()), join_ints(h.elements(), ','),
                      join_ints(hom_values(ring, e.pair.sub, e.pair.hom), ','), std::to_string(e.stabilizer_order)});
    nlohmann::json row = pair_json(ring, j);
    row["stabilizer"] = e.stabilizer_order;
    rows.push_back(row);
  }
  r.json = header_json(ring, "basis");
  r.json["rank"] = ring.rank();
  r.json["basis"] = rows;
  return r;
}

Report marks_report(const FiberedRing& ring) {
  const auto& lat = ring.lattice();
  Report r;
  r.title = "marks " + ring.group().name() + " n=" + std::to_string(ring.n());
  // Column per ghost coordinate (class representative K, ψ in Hom(K, C_n)).
  std::vector<int> offset(static_cast<std::size_t>(lat.class_count()) + 1, 0);
  for (int c = 0; c < lat.class_count(); ++c) offset[c + 1] = offset[c] + ring.ghost_width(c);
  r.header = {"basis"};
  nlohmann::json columns = nlohmann::json::array();
  for (int c = 0; c < lat.class_count(); ++c) {
    const int k = lat.class_rep(c);
    for (int a = 0; a < ring.ghost_width(c); ++a) {
      r.header.push_back("{" + join_ints(lat.at(k).elements(), ',') + "}:(" + join_ints(hom_values(ring, k, a), ',') + ")");
      columns.push_back({{"K", lat.at(k).elements()}, {"psi", hom_values(ring, k, a)}});
    }
  }
  nlohmann::json matrix = nlohmann::json::array();
  for (int j = 0; j < ring.rank(); ++j) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(offset.back()), 0);
    for (const auto& m : ring.mark_column(j)) row[offset[m.cls] + m.hom] = m.count;
    std::vector<std::string> cells{std::to_string(j)};
    for (auto v : row) cells.push_back(std::to_string(v));
    r.rows.push_back(std::move(cells));
    matrix.push_back(row);
  }
  r.json = header_json(ring, "marks");
  r.json["columns"] = columns;
  r.json["rows"] = matrix;
  return r;
}

Report species_report(const FiberedRing& ring, Format format) {
  Report r;
  r.title = "species " + ring.group().name() + " n=" + std::to_string(ring.n());
  r.header = {"point"};
  for (int j = 0; j < ring.rank(); ++j) r.header.push_back("b" + std::to_string(j));
  nlohmann::json points = nlohmann::json::array();
  nlohmann::json table = nlohmann::json::array();
  for (int p = 0; p < static_cast<int>(ring.points().size()); ++p) {
    const auto& pt = ring.points()[p];
    std::vector<std::string> cells{point_label(ring, p)};
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < ring.rank(); ++j) {
      const CycNum& v = ring.species_value(p, j);
      cells.push_back(cyc_cell(v, format));
      row.push_back(cyc_json(v));
    }
    r.rows.push_back(std::move(cells));
    points.push_back({{"H", ring.lattice().at(pt.sub).elements()}, {"h", pt.h}, {"stabilizer", pt.stabilizer_order}});
    table.push_back(row);
  }
  r.json = header_json(ring, "species");
  r.json["points"] = points;
  r.json["table"] = table;
  return r;
}

Report idempotents_report(const FiberedRing& ring, Format format) {
  Report r;
  r.title = "idempotents " + ring.group().name() + " n=" + std::to_string(ring.n());
  r.header = {"point", "basis", "coefficient"};
  nlohmann::json arr = nlohmann::json::array();
  for (int p = 0; p < static_cast<int>(ring.points().size()); ++p) {
    const auto& pt = ring.points()[p];
    const FBElement& e = ring.idempotent(p);
    for (const auto& [j, c] : e.coeffs()) r.rows.push_back({point_label(ring, p), pair_label(ring, j), cyc_cell(c, format)});
    arr.push_back({{"H", ring.lattice().at(pt.sub).elements()}, {"h", pt.h}, {"coeffs", element_json(e)}});
  }
  r.json = header_json(ring, "idempotents");
  r.json["idempotents"] = arr;
  return r;
}

nlohmann::json conductor_json(const FiberedRing& ring, const ConductorReport& c) {
  return {{"H", ring.lattice().at(c.point.sub).elements()},
          {"h", c.point.h},
          {"stabilizer", c.point.stabilizer_order},
          {"c", c.c},
          {"lower", c.lower},
          {"rhs", c.rhs},
          {"r", c.r},
          {"u", c.u},
          {"coprime_case", c.coprime_case},
          {"match", c.matches()}};
}

Report conductors_report(const FiberedRing& ring) {
  Report r;
  r.title = "conductors " + ring.group().name() + " n=" + std::to_string(ring.n());
  r.header = {"point", "c", "lower", "rhs", "r", "u", "coprime_case", "match"};
  nlohmann::json arr = nlohmann::json::array();
  for (int p = 0; p < static_cast<int>(ring.points().size()); ++p) {
    ConductorReport c = conductor(ring, p);
    r.rows.push_back({point_label(ring, p), std::to_string(c.c), std::to_string(c.lower), std::to_string(c.rhs),
                      std::to_string(c.r), std::to_string(c.u), c.coprime_case ? "true" : "false",
                      c.matches() ? "true" : "false"});
    arr.push_back(conductor_json(ring, c));
  }
  r.json = header_json(ring, "conductors");
  r.json["conductors"] = arr;
  return r;
}

}  // namespace fbr::cli
