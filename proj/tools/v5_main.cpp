#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "v5/cli.hpp"

namespace {

// Reads the whole payload source: the named file, or stdin when it is not a
// terminal.  Empty input stands for an empty payload.
std::string read_input(const std::string& input_path) {
  if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) throw v5::ContractError("cannot read input file: " + input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (isatty(fileno(stdin))) return "";
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

void write_output(const std::string& output_path, const v5::Json& response) {
  const std::string text = response.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw v5::ContractError("cannot write output file: " + output_path);
  out << text;
}

bool blank(const std::string& text) {
  return text.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic toolkit for conics, apolar schemes, quadratic involutions, and "
      "intersection numbers on P^1-bundles over P^2.\n"
      "Requests and responses are JSON envelopes; payloads come from --input or stdin.\n"
      "Exit codes: 0 success, 2 contract violation (bad input or precondition), 3 decision "
      "unsupported over the given field.\n"
      "Env: QF_MAX_SEARCH caps the rational-point witness search (the run fails rather than "
      "guess when the cap cuts the search short)."};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string input_path, output_path;
  bool batch = false;
  long seed = 0;
  app.add_option("--input", input_path, "read the JSON payload (or request) from FILE")
      ->type_name("FILE");
  app.add_option("--output", output_path, "write the JSON response to FILE")->type_name("FILE");
  app.add_flag("--batch", batch, "treat the input as an array of request envelopes");
  app.add_option("--seed", seed, "reserved; every operation is deterministic")->type_name("N");

  // Subcommand tree mirroring the dot-joined command names.
  std::string command;
  const auto add_group = [&](const std::string& group, const std::string& group_help,
                             const std::vector<std::pair<std::string, std::string>>& subs) {
    CLI::App* g = app.add_subcommand(group, group_help);
    g->require_subcommand(1);
    for (const auto& [name, help] : subs) {
      CLI::App* s = g->add_subcommand(name, help);
      const std::string full = group + "." + name;
      s->callback([&command, full]() { command = full; });
    }
    return g;
  };

  add_group("conic", "smooth conics: invariants, rational points, parametrization, descent",
            {{"invariants", "determinant, smoothness, and the dual conic"},
             {"solve", "decide rational-point existence with a certificate"},
             {"polar", "polar line of a point"},
             {"parametrize", "degree-2 parametrization from a rational point"},
             {"descend", "rational point from a quadratic-extension point"}});
  CLI::App* vsp = add_group(
      "vsp", "apolarity, strata, trisecant lines, special lines, cylinders",
      {{"decompose", "reduced apolar decomposition of a smooth form"},
       {"apolar-check", "test a length-3 scheme against a form"},
       {"stratum", "classify an apolar scheme (O / S2 / C6 / outside-trichotomy)"},
       {"trisecant", "line spanned by the projected images of a reduced scheme"},
       {"pullback", "net of conics cutting a line's preimage, with its length"},
       {"special-line", "test a dual-plane point against the dual conic"},
       {"incidence", "polar line with respect to the dual conic"},
       {"cylinders", "decide affine-plane and affine-3-space cylinder existence"},
       {"hilbert-point", "rational point of the plane of lines, off the dual conic if needed"}});
  (void)vsp;
  add_group("involution", "quadratic involutions of the plane",
            {{"classify", "Type I/II/III from the base scheme"},
             {"verify-type1", "exact blow-up lattice identities for three points"},
             {"length", "length of the scheme a generator list cuts out"}});
  CLI::App* chow = app.add_subcommand("chow", "intersection numbers on P^1-bundles over P^2");
  chow->require_subcommand(1);
  long c1 = 0, c2 = 0;
  std::string classes_text;
  {
    CLI::App* triple = chow->add_subcommand("triple", "triple intersection of degree-1 classes");
    triple->add_option("--c1", c1, "first Chern number of the bundle")->type_name("INT");
    triple->add_option("--c2", c2, "second Chern number of the bundle")->type_name("INT");
    triple->add_option("--classes", classes_text,
                       "JSON array of three {\"xi\": coeff, \"A\": coeff} objects")
        ->type_name("JSON");
    triple->callback([&command]() { command = "chow.triple"; });
    CLI::App* sark = chow->add_subcommand(
        "sarkisov", "intersection numbers of the double-projection diagram");
    sark->callback([&command]() { command = "chow.sarkisov"; });
    CLI::App* quad =
        chow->add_subcommand("quadric-link", "divisor identities of the line-projection link");
    quad->callback([&command]() { command = "chow.quadric-link"; });
  }

  CLI11_PARSE(app, argc, argv);

  v5::Json response;
  int exit_code = 0;
  try {
    const std::string text = read_input(input_path);
    v5::Json parsed;
    if (blank(text)) {
      parsed = v5::Json::object();
    } else {
      try {
        parsed = v5::Json::parse(text);
      } catch (const v5::Json::parse_error& e) {
        throw v5::ContractError(std::string("input is not valid JSON: ") + e.what());
      }
    }

    v5::RunOutcome outcome;
    if (batch) {
      outcome = v5::run_batch(parsed);
    } else if (!command.empty()) {
      v5::Json payload = parsed;
      if (command == "chow.triple") {
        // Flags override or stand in for payload fields.
        if (!payload.contains("c1") || c1 != 0) payload["c1"] = c1;
        if (!payload.contains("c2") || c2 != 0) payload["c2"] = c2;
        if (!classes_text.empty()) {
          try {
            payload["classes"] = v5::Json::parse(classes_text);
          } catch (const v5::Json::parse_error& e) {
            throw v5::ContractError(std::string("--classes is not valid JSON: ") + e.what());
          }
        }
      }
      outcome = v5::run_request(
          v5::Json{{"command", command}, {"payload", payload}, {"version", "1"}});
    } else {
      // No subcommand: the input itself is a full request envelope.
      outcome = v5::run_request(parsed);
    }
    response = outcome.response;
    exit_code = outcome.exit_code;
  } catch (const v5::ContractError& e) {
    response = v5::Json{{"status", "error"}, {"message", e.what()}};
    exit_code = 2;
  }

  try {
    write_output(output_path, response);
  } catch (const v5::ContractError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
