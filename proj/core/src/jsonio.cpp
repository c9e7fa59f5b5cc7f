#include "census/jsonio.hpp"

#include <fstream>
#include <limits>

namespace census {

namespace {

using nlohmann::json;

// cpp_int values that fit in 64 bits become JSON numbers, the rest decimal
// strings, so round-tripping never silently truncates.
json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

Int int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument(where + ": not an integer: " + j.get<std::string>());
    }
  }
  throw std::invalid_argument(where + ": expected an integer or decimal string");
}

json matrix_to_json(const IntegerMatrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols; ++j) row.push_back(int_to_json(M.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(where + ": expected a matrix");
  int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw std::invalid_argument(where + ": expected rows of numbers");
  int cols = static_cast<int>(j[0].size());
  IntegerMatrix M(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument(where + ": ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      M.at(i, c) = int_from_json(j[i][c], where);
  }
  return M;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  try {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

nlohmann::json table_to_json(const CosetTable& t) {
  return json{{"degree", t.degree}, {"action", t.action}};
}

CosetTable table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("action"))
    throw std::invalid_argument("coset table needs 'degree' and 'action'");
  CosetTable t;
  t.degree = j["degree"].get<int>();
  if (t.degree < 1) throw std::invalid_argument("coset table degree must be positive");
  t.action = j["action"].get<std::vector<std::vector<int>>>();
  for (const std::vector<int>& row : t.action) {
    if (static_cast<int>(row.size()) != t.degree)
      throw std::invalid_argument("coset table row length does not match degree");
    std::vector<bool> seen(static_cast<std::size_t>(t.degree) + 1, false);
    for (int v : row) {
      if (v < 1 || v > t.degree || seen[v])
        throw std::invalid_argument("coset table rows must be permutations of 1..degree");
      seen[v] = true;
    }
  }
  return t;
}

nlohmann::json abelian_to_json(const AbelianGroup& A) {
  json torsion = json::array();
  for (const Int& d : A.torsion) torsion.push_back(int_to_json(d));
  return json{{"rank", A.rank}, {"torsion", std::move(torsion)}, {"name", A.str()}};
}

nlohmann::json presentation_to_json(const Presentation& P) {
  json relators = json::array();
  for (const Word& w : P.relators) relators.push_back(render_word(w, P.generator_names));
  return json{{"generators", P.generator_names}, {"relators", std::move(relators)}};
}

nlohmann::json crystal_to_json(const CrystalGroup& C) {
  json ops = json::array();
  for (const CrystalOp& op : C.ops) {
    json tr = json::array();
    for (const Rational& r : op.translation) tr.push_back(rational_to_string(r));
    ops.push_back(json{{"matrix", matrix_to_json(op.matrix)}, {"translation", std::move(tr)}});
  }
  return json{{"dim", C.dim}, {"gram", matrix_to_json(C.gram)}, {"ops", std::move(ops)}};
}

CrystalGroup crystal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("gram") || !j.contains("ops"))
    throw std::invalid_argument("crystal group needs 'dim', 'gram' and 'ops'");
  CrystalGroup C;
  C.dim = j["dim"].get<int>();
  C.gram = matrix_from_json(j["gram"], "gram");
  if (!j["ops"].is_array() || j["ops"].empty())
    throw std::invalid_argument("crystal group needs at least the identity op");
  for (std::size_t k = 0; k < j["ops"].size(); ++k) {
    const json& o = j["ops"][k];
    std::string where = "ops[" + std::to_string(k) + "]";
    if (!o.is_object() || !o.contains("matrix") || !o.contains("translation"))
      throw std::invalid_argument(where + ": needs 'matrix' and 'translation'");
    CrystalOp op;
    op.matrix = matrix_from_json(o["matrix"], where + ".matrix");
    for (const json& e : o["translation"]) {
      if (e.is_number_integer())
        op.translation.emplace_back(Int(e.get<long long>()));
      else if (e.is_string())
        op.translation.push_back(rational_from_string(e.get<std::string>()));
      else
        throw std::invalid_argument(where + ".translation: expected strings like \"1/2\"");
    }
    if (static_cast<int>(op.translation.size()) != C.dim)
      throw std::invalid_argument(where + ".translation: expected " + std::to_string(C.dim) +
                                  " entries");
    C.ops.push_back(std::move(op));
  }
  C.validate();
  return C;
}

CrystalGroup load_crystal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open crystal file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
  return crystal_from_json(j);
}

}  // namespace census
