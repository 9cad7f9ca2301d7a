// Command-line front end. Exit status: 0 valid / success, 1 not a proof net,
// 2 unreadable or malformed input, 3 precondition violated.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mll/io.hpp"

namespace {

using mll::io::Json;

enum Exit { kValid = 0, kInvalid = 1, kFormat = 2, kPrecondition = 3 };

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mll::FormatError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return mll::io::parse_json(buffer.str());
}

// A net file, or a morphism file read as the net on [negate(source), target].
mll::io::NetData read_net(const std::string& path) {
  Json j = read_json(path);
  if (j.is_object() && !j.contains("sequent") && j.contains("source")) {
    Json net;
    net["sequent"] = {mll::print_formula(mll::negate(mll::parse_formula(j["source"].get<std::string>()))),
                      j["target"]};
    net["edges"] = j.contains("edges") ? j["edges"] : Json::array();
    return mll::io::net_from_json(net);
  }
  return mll::io::net_from_json(j);
}

struct Output {
  std::string path;
  std::ostringstream buffer;

  void flush() {
    if (path.empty()) {
      std::cout << buffer.str();
      return;
    }
    std::ofstream out(path);
    if (!out) throw mll::FormatError("cannot write " + path);
    out << buffer.str();
  }
};

int report(Output& out, const mll::Verdict& v) {
  if (v.valid) {
    out.buffer << "valid\n";
    return kValid;
  }
  out.buffer << mll::io::dump(mll::io::witness_to_json(*v.witness));
  return kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof nets for multiplicative linear logic with units"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o", out.path, "Write output to FILE")->type_name("FILE");

  std::string first, second;
  bool oracle = false, steps = false;

  auto* check = app.add_subcommand("check", "Decide whether a net (or morphism) is a proof net");
  check->add_option("net", first, "Net JSON")->required();
  check->add_flag("--oracle", oracle, "Try every switching instead of contracting");

  auto* check_old = app.add_subcommand("check-old", "Decide an old-style net with jumps and axiom links");
  check_old->add_option("net", first, "Old-net JSON")->required();
  check_old->add_flag("--oracle", oracle, "Try every switching of the converted net");

  auto* normalize = app.add_subcommand("normalize", "Eliminate all cuts");
  normalize->add_option("net", first, "Net JSON")->required();
  normalize->add_flag("--steps", steps, "Print each elimination step as a JSON line first");

  auto* compose = app.add_subcommand("compose", "Compose two net morphisms");
  compose->add_option("f", first, "Morphism JSON A -> B")->required();
  compose->add_option("g", second, "Morphism JSON B -> C")->required();

  auto* goi = app.add_subcommand("goi-compose", "Compose two GoI morphisms");
  goi->add_option("f", first, "GoI JSON S -> T")->required();
  goi->add_option("g", second, "GoI JSON T -> U")->required();

  auto* lam = app.add_subcommand("lam-compose", "Compose two laminated morphisms");
  lam->add_option("l", first, "Lam JSON S -> T")->required();
  lam->add_option("m", second, "Lam JSON T -> U")->required();

  auto* translate = app.add_subcommand("translate", "Translate a proof into its net");
  translate->add_option("proof", first, "Proof JSON")->required();

  auto* sequentialize = app.add_subcommand("sequentialize", "Recover a proof from a net");
  sequentialize->add_option("net", first, "Net JSON")->required();

  auto* render = app.add_subcommand("render", "Draw a net, old net or morphism as DOT");
  render->add_option("file", first, "Net, old-net or morphism JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kFormat;
  }

  int status = kValid;
  try {
    if (*check) {
      auto net = read_net(first);
      status = report(out, oracle ? mll::check_oracle(net.function, net.sequent)
                                  : mll::check_fast(net.function, net.sequent));
    } else if (*check_old) {
      mll::OldNet o = mll::io::old_net_from_json(read_json(first));
      mll::ConvertedNet c = mll::old_to_new(o);
      status = report(out, oracle ? mll::check_oracle(c.function, c.sequent)
                                  : mll::check_fast(c.function, c.sequent));
    } else if (*normalize) {
      auto data = read_net(first);
      auto net = mll::ProofNet::make(data.sequent, data.function);
      if (steps) {
        auto result = mll::normalize_stepwise(net);
        for (const auto& s : result.trace) out.buffer << mll::io::dump(mll::io::step_to_json(s));
        out.buffer << mll::io::dump(mll::io::net_to_json(result.net));
      } else {
        out.buffer << mll::io::dump(mll::io::net_to_json(mll::turbo_normalize(net)));
      }
    } else if (*compose) {
      auto f = mll::io::morphism_from_json(read_json(first));
      auto g = mll::io::morphism_from_json(read_json(second));
      out.buffer << mll::io::dump(mll::io::morphism_to_json(mll::compose_nets(f, g)));
    } else if (*goi) {
      auto f = mll::io::goi_from_json(read_json(first));
      auto g = mll::io::goi_from_json(read_json(second));
      out.buffer << mll::io::dump(mll::io::goi_to_json(mll::compose_goi(f, g)));
    } else if (*lam) {
      auto l = mll::io::lam_from_json(read_json(first));
      auto m = mll::io::lam_from_json(read_json(second));
      out.buffer << mll::io::dump(mll::io::lam_to_json(mll::compose_lam(l, m)));
    } else if (*translate) {
      auto p = mll::io::proof_from_json(read_json(first));
      out.buffer << mll::io::dump(mll::io::net_to_json(mll::translate(p)));
    } else if (*sequentialize) {
      auto net = read_net(first);
      auto p = mll::sequentialize(mll::ProofNet::make(net.sequent, net.function));
      out.buffer << mll::io::dump(mll::io::proof_to_json(p));
    } else if (*render) {
      Json j = read_json(first);
      if (j.is_object() && (j.contains("jumps") || j.contains("axioms"))) {
        out.buffer << mll::io::render_dot(mll::io::old_net_from_json(j));
      } else {
        auto net = read_net(first);
        out.buffer << mll::io::render_dot(net.sequent, net.function);
      }
    }
    out.flush();
  } catch (const mll::NotAProofNet& e) {
    out.buffer.str("");
    out.buffer << mll::io::dump(mll::io::witness_to_json(e.witness()));
    out.flush();
    return kInvalid;
  } catch (const mll::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kFormat;
  } catch (const mll::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kFormat;
  } catch (const mll::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const mll::RuleViolation& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const mll::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return status;
}
