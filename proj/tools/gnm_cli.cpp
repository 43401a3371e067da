// gnm: JSON front end for the moment-problem solver.
//
// With no flags the request is read from stdin. Flags build the request
// instead; --json passes a raw request string.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gnm/cli.hpp"

namespace {

gnm::Json function_field(const std::optional<std::string>& num, const std::optional<std::string>& den) {
  gnm::Json f;
  f["num"] = num.value_or("0");
  if (den) f["den"] = *den;
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for indefinite truncated Hamburger moment problems"};
  std::optional<std::string> command, moments, kind, tau_num, tau_den, phi_num, phi_den, raw;
  std::optional<std::size_t> kappa, order;
  app.add_option("--command", command, "analyze | solve | apply-tau | verify | expand");
  app.add_option("--moments", moments, "comma-separated rationals, e.g. \"1,0,1,0,1\"");
  app.add_option("--kappa", kappa, "negative index κ");
  app.add_option("--kind", kind, "MP (default) or IP");
  app.add_option("--tau-num", tau_num, "parameter numerator, e.g. \"-1\" or \"λ^2-1\"");
  app.add_option("--tau-den", tau_den, "parameter denominator");
  app.add_option("--phi-num", phi_num, "candidate numerator");
  app.add_option("--phi-den", phi_den, "candidate denominator");
  app.add_option("--order", order, "expansion order for expand");
  app.add_option("--json", raw, "raw JSON request");
  CLI11_PARSE(app, argc, argv);

  gnm::Json request;
  try {
    if (raw) {
      request = gnm::Json::parse(*raw);
    } else if (command) {
      request["command"] = *command;
      if (moments) request["moments"] = *moments;
      if (kappa) request["kappa"] = *kappa;
      if (kind) request["kind"] = *kind;
      if (tau_num || tau_den) request["tau"] = function_field(tau_num, tau_den);
      if (phi_num || phi_den) request["phi"] = function_field(phi_num, phi_den);
      if (order) request["order"] = *order;
    } else {
      const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
      request = gnm::Json::parse(text);
    }
  } catch (const gnm::Json::parse_error& e) {
    gnm::Json out;
    out["version"] = gnm::kVersion;
    out["status"] = "INPUT_ERROR";
    out["errors"] = gnm::Json::array({{{"path", ""}, {"message", e.what()}}});
    std::cout << out.dump(2) << '\n';
    return 2;
  }
  const auto result = gnm::run_command(request);
  std::cout << result.response.dump(2) << '\n';
  return result.exit_code;
}
