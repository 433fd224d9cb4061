#include "fbr/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace fbr {

namespace {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> gens;  // empty for cyclic groups built directly
};

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    for (int n = 1; n <= 12; ++n) e.push_back({"C" + std::to_string(n), {}});
    e.push_back({"V4", {"(1 2)(3 4)", "(1 3)(2 4)"}});
    e.push_back({"S3", {"(1 2)", "(1 2 3)"}});
    e.push_back({"S4", {"(1 2)", "(1 2 3 4)"}});
    e.push_back({"D8", {"(1 2 3 4)", "(1 3)"}});
    e.push_back({"Q8", {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}});
    e.push_back({"A4", {"(1 2 3)", "(1 2)(3 4)"}});
    e.push_back({"C4xC2", {"(1 2 3 4)", "(5 6)"}});
    e.push_back({"C9xC3", {"(1 2 3 4 5 6 7 8 9)", "(10 11 12)"}});
    return e;
  }();
  return entries;
}

std::string normalize_name(std::string_view name) {
  std::string s(name);
  // Accept the multiplication sign as an alias for 'x'.
  const std::string times = "\xC3\x97";
  for (auto pos = s.find(times); pos != std::string::npos; pos = s.find(times)) s.replace(pos, times.size(), "x");
  return s;
}

bool parse_cyclic_order(std::string_view name, int& n) {
  if (name.size() < 2 || name[0] != 'C') return false;
  n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    n = n * 10 + (name[i] - '0');
    if (n > 1000000) return false;
  }
  return n >= 1;
}

GroupPtr cyclic_group(int n, std::string name) {
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup::from_trusted_table(std::move(name), n, std::move(mul));
}

}  // namespace

GroupSpec GroupSpec::from_catalog(std::string name) {
  GroupSpec s;
  s.kind = Kind::Catalog;
  s.catalog = normalize_name(name);
  s.name = s.catalog;
  return s;
}

GroupSpec GroupSpec::from_permutations(std::string name, std::vector<std::string> gens) {
  GroupSpec s;
  s.kind = Kind::Permutations;
  s.name = std::move(name);
  s.permutations = std::move(gens);
  return s;
}

GroupSpec GroupSpec::from_cayley(std::string name, std::vector<std::vector<int>> table) {
  GroupSpec s;
  s.kind = Kind::Cayley;
  s.name = std::move(name);
  s.cayley = std::move(table);
  return s;
}

GroupSpec GroupSpec::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GroupError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw GroupError("group file must be a JSON object");
  std::string name = j.value("name", std::string("G"));
  const int kinds = int(j.contains("catalog")) + int(j.contains("permutations")) + int(j.contains("cayley"));
  if (kinds != 1) throw GroupError("group file needs exactly one of catalog, permutations, cayley");
  try {
    if (j.contains("catalog")) {
      GroupSpec s = from_catalog(j.at("catalog").get<std::string>());
      s.name = name;
      return s;
    }
    if (j.contains("permutations")) {
      return from_permutations(name, j.at("permutations").get<std::vector<std::string>>());
    }
    return from_cayley(name, j.at("cayley").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw GroupError(std::string("malformed group file: ") + e.what());
  }
}

GroupSpec GroupSpec::from_argument(const std::string& arg) {
  if (is_catalog_name(arg)) return from_catalog(arg);
  std::ifstream in(arg);
  if (!in) throw GroupError("'" + arg + "' is neither a catalog name nor a readable group file");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : catalog_entries()) v.push_back(e.name);
    return v;
  }();
  return names;
}

bool is_catalog_name(std::string_view name) {
  std::string s = normalize_name(name);
  int n = 0;
  if (parse_cyclic_order(s, n)) return true;
  const auto& e = catalog_entries();
  return std::any_of(e.begin(), e.end(), [&](const CatalogEntry& c) { return c.name == s; });
}

GroupPtr catalog_group(std::string_view name) {
  std::string s = normalize_name(name);
  int n = 0;
  if (parse_cyclic_order(s, n)) return cyclic_group(n, s);
  for (const auto& e : catalog_entries()) {
    if (e.name == s) return group_from_permutations(e.name, e.gens, 1 << 20);
  }
  throw GroupError("unknown catalog group '" + s + "'");
}

int max_point(std::string_view text) {
  int best = 0;
  int cur = -1;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
      if (cur > 100000) throw GroupError("point label too large in '" + std::string(text) + "'");
    } else {
      if (cur >= 0) best = std::max(best, cur);
      cur = -1;
    }
  }
  if (cur >= 0) best = std::max(best, cur);
  return best;
}

std::vector<int> parse_cycles(std::string_view text, int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  auto fail = [&](const std::string& why) {
    throw GroupError("invalid cycle notation '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch != '(') fail("expected '('");
    ++i;
    any = true;
    std::vector<int> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("unexpected character");
      int p = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        p = p * 10 + (text[i] - '0');
        ++i;
      }
      if (p < 1 || p > degree) fail("point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      if (used[p - 1]) fail("point " + std::to_string(p) + " repeated");
      used[p - 1] = true;
      cycle.push_back(p - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  if (!any) fail("empty string");
  return img;
}

GroupPtr group_from_permutations(std::string name, const std::vector<std::string>& gens, int order_cap) {
  int degree = 0;
  for (const auto& g : gens) degree = std::max(degree, max_point(g));
  std::vector<std::vector<int>> gen_imgs;
  for (const auto& g : gens) gen_imgs.push_back(parse_cycles(g, degree));

  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  // x^(pq) = (x^p)^q
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) r[x] = q[p[x]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gen_imgs) {
      auto prod = compose(elems[i], g);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (static_cast<int>(elems.size()) > order_cap) {
          throw GroupError("group order exceeds cap " + std::to_string(order_cap));
        }
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup::from_trusted_table(std::move(name), n, std::move(mul));
}

GroupPtr load_group(const GroupSpec& spec, int order_cap) {
  if (order_cap < 1) throw GroupError("order cap must be positive");
  switch (spec.kind) {
    case GroupSpec::Kind::Catalog: {
      int n = 0;
      if (parse_cyclic_order(spec.catalog, n) && n > order_cap) {
        throw GroupError("group order exceeds cap " + std::to_string(order_cap));
      }
      GroupPtr g = catalog_group(spec.catalog);
      if (g->order() > order_cap) throw GroupError("group order exceeds cap " + std::to_string(order_cap));
      return g;
    }
    case GroupSpec::Kind::Permutations:
      if (spec.permutations.empty()) return catalog_group("C1");
      return group_from_permutations(spec.name, spec.permutations, order_cap);
    case GroupSpec::Kind::Cayley: {
      const int n = static_cast<int>(spec.cayley.size());
      if (n == 0) throw GroupError("empty Cayley table");
      if (n > order_cap) throw GroupError("group order exceeds cap " + std::to_string(order_cap));
      std::vector<Elem> mul;
      mul.reserve(static_cast<std::size_t>(n) * n);
      for (const auto& row : spec.cayley) {
        if (static_cast<int>(row.size()) != n) throw GroupError("Cayley table is not square");
        mul.insert(mul.end(), row.begin(), row.end());
      }
      return FiniteGroup::from_table(spec.name, n, std::move(mul));
    }
  }
  throw GroupError("unknown group spec kind");
}

}  // namespace fbr
