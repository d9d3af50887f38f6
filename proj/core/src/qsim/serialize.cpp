#include "qts/qsim/serialize.hpp"

#include <stdexcept>

#include <json.hpp>

namespace qts::qsim {

namespace {

using nlohmann::json;

const char* kind_name(ProblemSpec::Kind k) {
  switch (k) {
    case ProblemSpec::Kind::none: return "none";
    case ProblemSpec::Kind::matvec: return "matvec";
    case ProblemSpec::Kind::boolean_or: return "boolean-or";
    case ProblemSpec::Kind::identity: return "identity";
    case ProblemSpec::Kind::custom: return "custom";
  }
  return "none";
}

ProblemSpec::Kind kind_from_name(const std::string& s) {
  if (s == "none") return ProblemSpec::Kind::none;
  if (s == "matvec") return ProblemSpec::Kind::matvec;
  if (s == "boolean-or") return ProblemSpec::Kind::boolean_or;
  if (s == "identity") return ProblemSpec::Kind::identity;
  throw std::invalid_argument("circuit json: unknown problem kind " + s);
}

json matrix_to_json(const algebra::FieldMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["modulus"] = m.field().modulus();
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m(r, c));
  j["entries"] = std::move(entries);
  return j;
}

algebra::FieldMatrix matrix_from_json(const json& j) {
  algebra::FieldMatrix m(algebra::PrimeField(j.at("modulus").get<std::uint64_t>()),
                         j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& entries = j.at("entries");
  std::size_t t = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, entries.at(t++).get<std::uint64_t>());
  return m;
}

}  // namespace

std::string circuit_to_json(const QueryCircuit& c) {
  if (c.problem().kind == ProblemSpec::Kind::custom) {
    throw std::invalid_argument("circuit json: custom problem functions are not serializable");
  }
  const RegisterLayout& L = c.layout();
  json j;
  j["layout"]["modulus"] = L.alphabet().field().modulus();
  j["layout"]["alphabet"] =
      std::vector<std::uint64_t>(L.alphabet().elements().begin(), L.alphabet().elements().end());
  j["layout"]["n"] = L.n_inputs();
  j["layout"]["work_dim"] = L.work_dim();
  j["layout"]["max_dimension"] = L.limits().max_dimension;
  j["layout"]["prune_eps"] = L.limits().prune_eps;
  j["oracle_calls"] = c.query_count();
  json mats = json::array();
  for (std::size_t t = 0; t <= c.query_count(); ++t) {
    const CMatrix& u = c.unitary(t);
    json rows = json::array();
    for (std::size_t r = 0; r < u.rows(); ++r) {
      json row = json::array();
      for (std::size_t col = 0; col < u.cols(); ++col) {
        row.push_back(json::array({u(r, col).real(), u(r, col).imag()}));
      }
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  j["unitaries"] = std::move(mats);
  json claims = json::array();
  for (const auto& per_w : c.claim_table()) {
    json list = json::array();
    for (const Claim& cl : per_w) list.push_back({{"output", cl.output}, {"value", cl.value}});
    claims.push_back(std::move(list));
  }
  j["claims"] = std::move(claims);
  j["problem"]["kind"] = kind_name(c.problem().kind);
  if (c.problem().matrix) j["problem"]["matrix"] = matrix_to_json(*c.problem().matrix);
  return j.dump();
}

QueryCircuit circuit_from_json(const std::string& text) {
  const json j = json::parse(text);
  const auto& jl = j.at("layout");
  SimLimits limits;
  if (jl.contains("max_dimension")) limits.max_dimension = jl["max_dimension"].get<std::size_t>();
  if (jl.contains("prune_eps")) limits.prune_eps = jl["prune_eps"].get<double>();
  algebra::Alphabet alphabet(algebra::PrimeField(jl.at("modulus").get<std::uint64_t>()),
                             jl.at("alphabet").get<std::vector<std::uint64_t>>());
  RegisterLayout layout(std::move(alphabet), jl.at("n").get<std::size_t>(),
                        jl.at("work_dim").get<std::size_t>(), limits);

  std::vector<CMatrix> unitaries;
  for (const auto& jm : j.at("unitaries")) {
    const std::size_t rows = jm.size();
    CMatrix u(rows, rows == 0 ? 0 : jm.at(0).size());
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& row = jm.at(r);
      for (std::size_t c = 0; c < row.size(); ++c) {
        u(r, c) = cd(row.at(c).at(0).get<double>(), row.at(c).at(1).get<double>());
      }
    }
    unitaries.push_back(std::move(u));
  }
  if (j.at("oracle_calls").get<std::size_t>() + 1 != unitaries.size()) {
    throw std::invalid_argument("circuit json: oracle_calls inconsistent with unitary count");
  }
  std::vector<std::vector<Claim>> claims;
  for (const auto& per_w : j.at("claims")) {
    std::vector<Claim> list;
    for (const auto& cl : per_w) {
      list.push_back(Claim{cl.at("output").get<std::size_t>(), cl.at("value").get<std::uint64_t>()});
    }
    claims.push_back(std::move(list));
  }
  ProblemSpec problem;
  problem.kind = kind_from_name(j.at("problem").at("kind").get<std::string>());
  if (j.at("problem").contains("matrix")) {
    problem.matrix = matrix_from_json(j["problem"]["matrix"]);
  }
  return QueryCircuit(std::move(layout), std::move(unitaries), std::move(claims),
                      std::move(problem));
}

}  // namespace qts::qsim
