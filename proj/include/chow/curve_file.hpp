#pragma once

// Curve files: JSON objects {"n": N, "d": D, "coeffs": [[...], ...]} with n+1
// rows of d+1 exact rationals ("p" or "p/q"). Row i lists the coefficients of
// f_i on z0^(d-j) z1^j for j = 0..d.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chow/curve.hpp"

namespace chow {

class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline CurveMap parse_curve(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is one past the offending character.
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("syntax error at " + detail::line_col(text, at));
  }
  if (!doc.is_object()) throw ParseError("curve file must hold a JSON object");
  for (const char* key : {"n", "d", "coeffs"})
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  if (!doc["n"].is_number_integer() || !doc["d"].is_number_integer())
    throw ParseError("fields 'n' and 'd' must be integers");
  const int n = doc["n"].get<int>();
  const int d = doc["d"].get<int>();
  if (n < 1) throw ParseError("n must be at least 1");
  if (d < 1) throw ParseError("d must be at least 1");
  const auto& rows = doc["coeffs"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n + 1)
    throw ParseError("coeffs must have n+1 = " + std::to_string(n + 1) + " rows");
  std::vector<NumericForm> comps;
  for (int i = 0; i <= n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != d + 1)
      throw ParseError("row " + std::to_string(i) + " must have d+1 = " + std::to_string(d + 1) + " entries");
    std::vector<Scalar> c;
    for (int j = 0; j <= d; ++j) {
      const auto& cell = row[j];
      Scalar s;
      bool ok = false;
      if (cell.is_string()) {
        ok = try_parse_scalar(cell.get<std::string>(), s);
      } else if (cell.is_number_integer()) {
        s = Scalar(cell.dump());
        ok = true;
      }
      if (!ok) throw ParseError("invalid rational at row " + std::to_string(i) + " col " + std::to_string(j));
      c.push_back(s);
    }
    comps.emplace_back(std::move(c));
  }
  try {
    return CurveMap(n, std::move(comps));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline CurveMap read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_curve(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string to_curve_json(const CurveMap& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : f.components()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& s : c.coeffs()) row.push_back(to_string(s));
    rows.push_back(row);
  }
  nlohmann::json doc{{"n", f.n()}, {"d", f.d()}, {"coeffs", rows}};
  return doc.dump() + "\n";
}

/// "u0,...,un;v0,...,vn"
inline Plane parse_plane(std::string_view text) {
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        out.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  auto halves = split(text, ';');
  if (halves.size() != 2) throw ParseError("plane must be 'u0,...,un;v0,...,vn'");
  std::vector<Scalar> cov[2];
  for (int h = 0; h < 2; ++h)
    for (const auto& tok : split(halves[h], ',')) {
      Scalar s;
      if (!try_parse_scalar(tok, s)) throw ParseError("invalid rational '" + tok + "' in plane");
      cov[h].push_back(s);
    }
  if (cov[0].size() != cov[1].size()) throw ParseError("plane covectors differ in length");
  return Plane(std::move(cov[0]), std::move(cov[1]));
}

}  // namespace chow
