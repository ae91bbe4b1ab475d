#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lqt/extension.hpp"

namespace lqt {

using json = nlohmann::ordered_json;

struct ParsedStructure {
  LeftQuasigroup q;
  std::string name;  // optional metadata
};

// "point", "projection:n", "dihedral:n", "cyclic:n".
inline LeftQuasigroup named_structure(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  int arg = 0;
  if (colon != std::string::npos) {
    try {
      arg = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("named_structure: bad size in '" + name + "'");
    }
  }
  if (kind == "point") return one_point_lq();
  if (kind == "projection") return projection_lq(arg);
  if (kind == "dihedral") return dihedral_quandle(arg);
  if (kind == "cyclic") return cyclic_shift_lq(arg);
  throw std::invalid_argument("named_structure: unknown name '" + name + "'");
}

namespace detail {

inline LeftQuasigroup table_with_transpose(std::vector<std::vector<Point>> rows, bool transpose) {
  if (transpose) {
    auto t = rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[i].size() != rows.size())
          throw std::invalid_argument("transpose: table is not square");
        t[j][i] = rows[i][j];
      }
    rows = std::move(t);
  }
  return LeftQuasigroup::from_rows(rows);
}

inline ParsedStructure parse_structure_json(const std::string& text, bool transpose) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  if (!j.contains("table")) throw std::invalid_argument("JSON structure lacks \"table\"");
  std::vector<std::vector<Point>> rows = j["table"].get<std::vector<std::vector<Point>>>();
  if (j.contains("order") && j["order"].get<int>() != static_cast<int>(rows.size()))
    throw std::invalid_argument("JSON structure: \"order\" disagrees with table size");
  ParsedStructure out{detail::table_with_transpose(std::move(rows), transpose),
                      j.value("name", std::string())};
  return out;
}

}  // namespace detail

// Text format: first line the order n, then n whitespace-separated rows;
// '#' starts a comment. A JSON object with "table" (and optional "name",
// "order") is accepted as well.
inline ParsedStructure parse_structure(const std::string& text, bool transpose = false) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty input");
  if (text[first] == '{') return detail::parse_structure_json(text, transpose);

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Point> entries;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int v;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        std::ostringstream os;
        os << "line " << lineno << ": expected an integer, got '" << tok << "'";
        throw std::invalid_argument(os.str());
      }
      if (n < 0) {
        if (v < 1) {
          std::ostringstream os;
          os << "line " << lineno << ": order must be positive";
          throw std::invalid_argument(os.str());
        }
        n = v;
      } else {
        if (static_cast<int>(entries.size()) >= n * n) {
          std::ostringstream os;
          os << "line " << lineno << ": trailing data after " << n << "x" << n << " table";
          throw std::invalid_argument(os.str());
        }
        entries.push_back(v);
      }
    }
  }
  if (n < 0) throw std::invalid_argument("missing order line");
  if (static_cast<int>(entries.size()) != n * n) {
    std::ostringstream os;
    os << "expected " << n * n << " table entries, got " << entries.size();
    throw std::invalid_argument(os.str());
  }
  std::vector<std::vector<Point>> rows(n);
  for (int x = 0; x < n; ++x)
    rows[x].assign(entries.begin() + x * n, entries.begin() + (x + 1) * n);
  return ParsedStructure{detail::table_with_transpose(std::move(rows), transpose), ""};
}

inline ParsedStructure load_structure(const std::string& path, bool transpose = false) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str(), transpose);
}

// Canonical text emission; parse-emit round trips are byte identical.
inline std::string emit_structure(const LeftQuasigroup& q) {
  std::ostringstream os;
  os << q.order() << '\n';
  for (int x = 0; x < q.order(); ++x) {
    for (int y = 0; y < q.order(); ++y) {
      if (y) os << ' ';
      os << q.op(x, y);
    }
    os << '\n';
  }
  return os.str();
}

inline json structure_to_json(const LeftQuasigroup& q, const std::string& name = "") {
  json j;
  if (!name.empty()) j["name"] = name;
  j["order"] = q.order();
  j["table"] = q.rows();
  return j;
}

// Extension specification: JSON with "moduli", "f", "g" (integer matrices),
// a base ("base": name or inline structure; defaults to the one-point
// structure) and either "theta" (|Q| x |Q| array of elements) or "c" (affine
// constant). Elements of A are arrays of residues or plain indices.
inline Extension parse_extension_spec(const json& j) {
  if (!j.contains("moduli")) throw std::invalid_argument("extension spec lacks \"moduli\"");
  AbelianGroup a(j["moduli"].get<std::vector<int>>());
  auto element_of = [&](const json& v) -> int {
    if (v.is_array()) return a.encode(v.get<std::vector<int>>());
    return v.get<int>();
  };
  auto endo_of = [&](const json& v) -> EndoMap {
    return EndoMap::from_matrix(a, v.get<std::vector<std::vector<int>>>());
  };
  if (!j.contains("f")) throw std::invalid_argument("extension spec lacks \"f\"");
  if (!j.contains("g")) throw std::invalid_argument("extension spec lacks \"g\"");
  EndoMap f = endo_of(j["f"]);
  EndoMap g = endo_of(j["g"]);

  LeftQuasigroup base = one_point_lq();
  if (j.contains("base")) {
    if (j["base"].is_string())
      base = named_structure(j["base"].get<std::string>());
    else
      base = LeftQuasigroup::from_rows(j["base"]["table"].get<std::vector<std::vector<Point>>>());
  }
  Cocycle theta = Cocycle::zero(base.order());
  if (j.contains("c")) {
    if (base.order() != 1)
      throw std::invalid_argument("extension spec: \"c\" requires the one-point base");
    theta.values[0] = element_of(j["c"]);
  } else if (j.contains("theta") && !(j["theta"].is_string() && j["theta"] == "zero")) {
    const json& tj = j["theta"];
    if (static_cast<int>(tj.size()) != base.order())
      throw std::invalid_argument("extension spec: theta has wrong number of rows");
    for (int x = 0; x < base.order(); ++x) {
      if (static_cast<int>(tj[x].size()) != base.order())
        throw std::invalid_argument("extension spec: theta has wrong row length");
      for (int y = 0; y < base.order(); ++y)
        theta.values[x * base.order() + y] = element_of(tj[x][y]);
    }
  }
  return build_extension(base, a, g, f, theta);
}

inline json extension_to_json(const Extension& e) {
  json j;
  j["order"] = e.total.order();
  j["table"] = e.total.rows();
  json map = json::array();
  for (int p = 0; p < e.total.order(); ++p) {
    auto [x, av] = e.decode(p);
    map.push_back(json{{"point", p}, {"base", x}, {"fiber", e.a.decode(av)}});
  }
  j["index_map"] = map;
  return j;
}

}  // namespace lqt
