#include "gnm/cli.hpp"

#include <set>
#include <string>

#include "gnm/errors.hpp"
#include "gnm/hankel.hpp"
#include "gnm/laurent.hpp"
#include "gnm/nevanlinna.hpp"
#include "gnm/solver.hpp"

namespace gnm {

namespace {

struct Request {
  std::string command;
  std::optional<MomentSequence> moments;
  std::size_t kappa = 0;
  ProblemKind kind = ProblemKind::MP;
  std::optional<RationalFunction> tau;
  std::optional<RationalFunction> phi;
  std::size_t order = 0;
};

const std::set<std::string> kCommands = {"analyze", "solve", "apply-tau", "verify", "expand"};

Json header(const std::string& command) {
  Json o;
  o["version"] = kVersion;
  o["command"] = command;
  return o;
}

MomentSequence read_moments(const Json& req) {
  if (!req.contains("moments")) throw InputError("/moments", "missing required field");
  const Json& m = req["moments"];
  std::vector<Rational> s;
  if (m.is_string()) {
    try {
      s = parse_rational_list(m.get<std::string>());
    } catch (const MathError& e) {
      throw InputError("/moments", e.what());
    }
  } else if (m.is_array()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      s.push_back(rational_from_json(m[i], "/moments/" + std::to_string(i)));
    }
  } else {
    throw InputError("/moments", "expected an array of rational strings");
  }
  if (s.empty()) throw InputError("/moments", "moment list is empty");
  return MomentSequence(std::move(s));
}

std::size_t read_nonnegative(const Json& req, const std::string& key) {
  if (!req.contains(key)) throw InputError("/" + key, "missing required field");
  const Json& v = req[key];
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_string()) {
    const auto t = v.get<std::string>();
    if (!t.empty() && t.find_first_not_of("0123456789") == std::string::npos && t.size() < 10) {
      return std::stoul(t);
    }
  }
  throw InputError("/" + key, "expected a nonnegative integer");
}

RationalFunction read_function(const Json& req, const std::string& key) {
  if (!req.contains(key)) throw InputError("/" + key, "missing required field");
  const Json& f = req[key];
  if (!f.is_object()) throw InputError("/" + key, "expected an object {num, den}");
  if (!f.contains("num")) throw InputError("/" + key + "/num", "missing required field");
  const Polynomial num = polynomial_from_json(f["num"], "/" + key + "/num");
  Polynomial den = Polynomial::constant(1);
  if (f.contains("den")) den = polynomial_from_json(f["den"], "/" + key + "/den");
  if (den.is_zero()) throw InputError("/" + key + "/den", "denominator is zero");
  return rf_normalize(num, den);
}

Request parse_request(const Json& req) {
  if (!req.is_object()) throw InputError("", "request must be a JSON object");
  if (!req.contains("command") || !req["command"].is_string()) {
    throw InputError("/command", "missing or non-string command");
  }
  Request r;
  r.command = req["command"].get<std::string>();
  if (!kCommands.contains(r.command)) throw InputError("/command", "unknown command " + r.command);
  if (req.contains("kind")) {
    const Json& k = req["kind"];
    if (k == "MP") {
      r.kind = ProblemKind::MP;
    } else if (k == "IP") {
      r.kind = ProblemKind::IP;
    } else {
      throw InputError("/kind", "expected \"MP\" or \"IP\"");
    }
  }
  if (r.command == "expand") {
    r.phi = read_function(req, "phi");
    r.order = read_nonnegative(req, "order");
    return r;
  }
  r.moments = read_moments(req);
  if (r.command == "analyze") return r;
  r.kappa = read_nonnegative(req, "kappa");
  if (r.command == "apply-tau") r.tau = read_function(req, "tau");
  if (r.command == "verify") r.phi = read_function(req, "phi");
  return r;
}

Json inertia_json(const Inertia& in) {
  Json o;
  o["nu_plus"] = in.nu_plus;
  o["nu_zero"] = in.nu_zero;
  o["nu_minus"] = in.nu_minus;
  return o;
}

Json classification_json(const Classification& c, const MomentSequence& s) {
  Json o;
  o["category"] = to_string(c.category);
  o["inertia"] = inertia_json(c.inertia);
  o["normal_indices"] = c.normal_indices;
  o["hankel_rank"] = c.hankel_rank;
  o["nu0"] = c.nu0;
  o["residual"] = to_json(c.residual);
  o["m_res"] = c.m_res ? Json(*c.m_res) : Json(nullptr);
  const auto rg = recursive_generation(s);
  o["recursively_generated"] = rg.flag;
  o["alphas"] = rg.alphas ? to_json(*rg.alphas) : Json(nullptr);
  return o;
}

Json descriptor_json(const ParamDescriptor& d) {
  Json o;
  o["W"] = to_json(d.W);
  o["chain_matrix"] = to_json(d.chain_matrix);
  o["basic_matrix"] = to_json(d.basic_matrix);
  o["tau_kappa"] = d.tau_kappa;
  o["tau_kappa_max"] = d.tau_kappa_max;
  o["tau_condition"] = to_string(d.tau_condition);
  o["tau_class"] = to_string(d.tau_class);
  o["odd_shift"] = to_string(d.odd_shift);
  o["nu0"] = d.nu0;
  o["nu_minus"] = d.nu_minus;
  o["chain_kappa"] = d.chain_kappa;
  o["moment_scale"] = to_string(d.moment_scale);
  o["det"] = {{"scale", to_string(d.det_scale)}, {"lambda_power", d.det_lambda_power}};
  return o;
}

Json verdict_json(const Verdict& v) {
  Json o;
  o["status"] = v.pass ? "PASS" : "FAIL";
  if (!v.pass) {
    o["failed_check"] = v.failed_check;
    o["detail"] = v.detail;
    if (v.index) o["index"] = *v.index;
  }
  return o;
}

void put_solve(Json& out, const SolutionReport& rep) {
  switch (rep.status) {
    case Status::Unique: out["status"] = "OK_UNIQUE"; break;
    case Status::Parametrized: out["status"] = "OK_PARAMETRIZED"; break;
    case Status::Unsolvable: out["status"] = "UNSOLVABLE"; break;
  }
  out["reason"] = to_string(rep.reason);
  out["category"] = to_string(rep.classification.category);
  if (rep.unique_solution) out["phi"] = to_json(*rep.unique_solution);
  if (rep.descriptor) out["descriptor"] = descriptor_json(*rep.descriptor);
}

CommandResult dispatch(const Request& r) {
  CommandResult res{header(r.command), 0};
  Json& out = res.response;
  if (r.command == "expand") {
    const auto e = laurent_expand(*r.phi, r.order);
    out["status"] = "OK";
    out["coeffs"] = to_json(e.coeffs);
    if (e.coeffs[0] == 0 && r.order >= 1) {
      out["moments"] = to_json(moments_from_expansion(e, r.order - 1).entries());
    }
    return res;
  }
  const MomentSequence& s = *r.moments;
  if (r.command == "analyze") {
    const auto cls = classify(s);
    out["status"] = "OK";
    out["ell"] = s.ell();
    out["n"] = s.n();
    out["parity"] = s.is_odd() ? "odd" : "even";
    out["classification"] = classification_json(cls, s);
    out["chain"] = to_json(cls.chain);
    return res;
  }
  if (r.command == "verify") {
    const auto v = verify_solution(s, r.kappa, r.kind, *r.phi);
    Json vj = verdict_json(v);
    for (auto& [k, val] : vj.items()) out[k] = val;
    out["kind"] = to_string(r.kind);
    res.exit_code = v.pass ? 0 : 1;
    return res;
  }
  const SolutionReport rep = solve({s, r.kappa, r.kind});
  if (r.command == "solve") {
    put_solve(out, rep);
    res.exit_code = rep.status == Status::Unsolvable ? 1 : 0;
    return res;
  }
  // apply-tau
  if (rep.status != Status::Parametrized) {
    put_solve(out, rep);
    res.exit_code = 1;
    if (rep.status == Status::Unique) {
      out["status"] = "FAIL";
      out["detail"] = "instance has a unique solution; there is no parameter to apply";
    }
    return res;
  }
  const ParamDescriptor& d = *rep.descriptor;
  const auto check = check_parameter(*r.tau, d);
  Json pc;
  pc["kappa_tau"] = check.kappa_tau;
  pc["satisfies_E"] = check.satisfies_E;
  pc["satisfies_O"] = check.satisfies_O;
  pc["in_subclass_1"] = check.in_subclass_1;
  pc["admissible"] = check.admissible;
  const auto nu = nu_readings(d, *r.tau);
  Json nj;
  nj["kappa_0"] = nu.kappa_0;
  nj["printed"] = nu.printed;
  nj["corrected"] = nu.corrected;
  try {
    const RationalFunction phi = solution_from_parameter(d, *r.tau);
    const auto v = verify_solution(s, r.kappa, r.kind, phi);
    out["status"] = v.pass && check.admissible ? "PASS" : "FAIL";
    out["phi"] = to_json(phi);
    out["parameter_check"] = pc;
    out["nu_readings"] = nj;
    out["verdict"] = verdict_json(v);
    out["descriptor"] = descriptor_json(d);
    res.exit_code = v.pass && check.admissible ? 0 : 1;
  } catch (const MathError& e) {
    if (e.code() != ErrorCode::DegenerateTransform) throw;
    out["status"] = "FAIL";
    out["parameter_check"] = pc;
    out["detail"] = e.what();
    res.exit_code = 1;
  }
  return res;
}

}  // namespace

CommandResult run_command(const Json& request) {
  try {
    return dispatch(parse_request(request));
  } catch (const InputError& e) {
    CommandResult res{header(request.is_object() && request.contains("command") &&
                                     request["command"].is_string()
                                 ? request["command"].get<std::string>()
                                 : std::string()),
                      2};
    res.response["status"] = "INPUT_ERROR";
    res.response["errors"] = Json::array({{{"path", e.pointer()}, {"message", e.what()}}});
    return res;
  } catch (const MathError& e) {
    CommandResult res{header(""), 2};
    res.response["status"] = "INPUT_ERROR";
    res.response["errors"] =
        Json::array({{{"path", ""}, {"message", std::string(to_string(e.code())) + ": " + e.what()}}});
    return res;
  }
}

}  // namespace gnm
