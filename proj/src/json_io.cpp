#include "kron/json_io.hpp"

#include <sstream>

#include "kron/error.hpp"

namespace kron {

Json rep_to_json(const KronRep& m) {
  Json j;
  j["p"] = m.field->p();
  j["k"] = m.field->k();
  j["n"] = m.n_arrows;
  j["d"] = {m.d1, m.d2};
  Json mats = Json::array();
  for (const Matrix& mat : m.mats) {
    Json rows = Json::array();
    for (int r = 0; r < m.d2; ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.d1; ++c) row.push_back(mat.at(r, c));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  j["mats"] = std::move(mats);
  return j;
}

KronRep rep_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("representation: expected a JSON object");
  for (const char* key : {"p", "k", "n", "d", "mats"})
    if (!j.contains(key))
      throw ParseError(std::string("representation: missing field '") + key +
                       "'");
  if (!j["p"].is_number_integer() || !j["k"].is_number_integer() ||
      !j["n"].is_number_integer())
    throw ParseError("representation: p, k, n must be integers");
  int p = j["p"].get<int>(), k = j["k"].get<int>(), n = j["n"].get<int>();
  if (n != 2 && n != 3) throw ParseError("representation: n must be 2 or 3");
  FieldPtr f;
  try {
    f = Field::get(p, k);
  } catch (const DomainError& e) {
    throw ParseError(std::string("representation: ") + e.what());
  }
  if (!j["d"].is_array() || j["d"].size() != 2 ||
      !j["d"][0].is_number_integer() || !j["d"][1].is_number_integer())
    throw ParseError("representation: d must be a pair of integers");
  int d1 = j["d"][0].get<int>(), d2 = j["d"][1].get<int>();
  if (d1 < 0 || d2 < 0)
    throw ParseError("representation: dimensions must be non-negative");
  if (!j["mats"].is_array() || static_cast<int>(j["mats"].size()) != n)
    throw ParseError("representation: mats must list one matrix per arrow");
  std::vector<Matrix> mats;
  for (const Json& jm : j["mats"]) {
    if (!jm.is_array() || static_cast<int>(jm.size()) != d2)
      throw ParseError("representation: each matrix needs d2 rows");
    Matrix m(f, d2, d1);
    for (int r = 0; r < d2; ++r) {
      const Json& row = jm[r];
      if (!row.is_array() || static_cast<int>(row.size()) != d1)
        throw ParseError("representation: each row needs d1 entries");
      for (int c = 0; c < d1; ++c) {
        if (!row[c].is_number_integer())
          throw ParseError("representation: entries must be integers");
        long long v = row[c].get<long long>();
        if (v < 0 || v >= f->q())
          throw ParseError("representation: entry out of range 0..q-1");
        m.set(r, c, static_cast<Scalar>(v));
      }
    }
    mats.push_back(std::move(m));
  }
  return KronRep(f, n, d1, d2, std::move(mats));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json handle_to_json(const SubmoduleHandle& h) {
  Json j;
  j["dim"] = {h.b1.rows(), h.b2.rows()};
  j["basis1"] = matrix_to_json(h.b1);
  j["basis2"] = matrix_to_json(h.b2);
  return j;
}

std::string coeff_quiver_dot(const CoeffQuiver& q) {
  std::ostringstream out;
  out << "digraph coeffquiver {\n";
  out << "  rankdir=TB;\n";
  for (int i = 0; i < q.top; ++i)
    out << "  t" << i << " [shape=box,label=\"t" << i << "\"];\n";
  for (int i = 0; i < q.bottom; ++i)
    out << "  b" << i << " [shape=circle,label=\"b" << i << "\"];\n";
  for (const auto& e : q.edges)
    out << "  t" << e.top_v << " -> b" << e.bottom_v << " [label=\"" << e.arrow
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace kron
