#include "heis/exterior.hpp"

#include <cctype>

namespace heis {

using nlohmann::json;

json scalar_json(const Elem& e) { return e.str(); }

Elem scalar_from_json(const Field& f, const json& j) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_bigint(BigInt(j.get<long long>()));
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("scalar must be a string or an integer: " + j.dump());
}

json subspace_to_json(const Subspace<Elem>& u, const Field& f) {
  json basis = json::array();
  for (auto& r : u.rows()) {
    json row = json::array();
    for (auto& x : r) row.push_back(scalar_json(x));
    basis.push_back(row);
  }
  return {{"field", f.spec()}, {"ambient", u.ambient()}, {"basis", basis}};
}

Subspace<Elem> subspace_from_json(const json& j, const Field& f) {
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array()) {
    throw ParseError("subspace JSON needs a \"basis\" array");
  }
  std::size_t ambient = j.value("ambient", 6);
  std::vector<Vec<Elem>> rows;
  for (auto& r : j["basis"]) {
    if (!r.is_array() || r.size() != ambient) {
      throw ParseError("basis rows must have " + std::to_string(ambient) + " entries");
    }
    Vec<Elem> v;
    for (auto& x : r) v.push_back(scalar_from_json(f, x));
    rows.push_back(v);
  }
  return Subspace<Elem>::span(rows, ambient, f.zero());
}

json matrix_to_json(const Matrix<Elem>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Matrix<Elem> matrix_from_json(const json& j, const Field& f) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be an array of rows");
  std::size_t cols = j[0].size();
  std::vector<Vec<Elem>> rows;
  for (auto& r : j) {
    if (!r.is_array() || r.size() != cols) throw ParseError("ragged matrix");
    Vec<Elem> v;
    for (auto& x : r) v.push_back(scalar_from_json(f, x));
    rows.push_back(v);
  }
  return Matrix<Elem>::from_rows(rows, cols, f.zero());
}

Tensor<Elem> parse_tensor(const std::string& text, const Field& f) {
  Tensor<Elem> out(6, f.zero());
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty tensor");
  // split at top-level signs
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0 && i > start && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));
  for (auto term : terms) {
    bool negative = false;
    while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      negative ^= term[0] == '-';
      term.erase(0, 1);
    }
    auto pos = term.rfind('s');
    if (pos == std::string::npos || pos + 3 != term.size() || !std::isdigit(static_cast<unsigned char>(term[pos + 1])) ||
        !std::isdigit(static_cast<unsigned char>(term[pos + 2]))) {
      throw ParseError("tensor term '" + term + "' must end in sIJ");
    }
    int i = term[pos + 1] - '0', j = term[pos + 2] - '0';
    int k = pair_index(i, j);
    if (k < 0) throw ParseError("unknown basis tensor '" + term.substr(pos) + "'");
    std::string coef = term.substr(0, pos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    Elem c = f.one();
    if (!coef.empty()) {
      try {
        c = f.parse(coef);
      } catch (const FieldError& e) {
        throw ParseError(e.what());
      }
    }
    out[k] = out[k] + (negative ? -c : c);
  }
  return out;
}

std::string tensor_str(const Tensor<Elem>& x) {
  std::string out;
  for (int k = 0; k < 6; ++k) {
    if (x[k].is_zero()) continue;
    std::string c = x[k].str();
    std::string term;
    if (c == "1") {
      term = kPairNames[k];
    } else if (c == "-1") {
      term = std::string("-") + kPairNames[k];
    } else {
      bool compound = false;
      for (std::size_t i = 1; i < c.size(); ++i) compound |= c[i] == '+' || c[i] == '-';
      term = (compound ? "(" + c + ")" : c) + "*" + kPairNames[k];
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace heis
