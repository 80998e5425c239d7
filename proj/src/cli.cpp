#include "dcc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dcc/hilboracle.hpp"
#include "dcc/protocols.hpp"

namespace dcc::cli {

namespace {

Program load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str());
}

const Term& lookup(const Program& prog, const std::string& name) {
  const Term* t = prog.find(name);
  if (!t) throw std::invalid_argument("no definition named '" + name + "'");
  return *t;
}

// Runs body, turning parse, type, I/O and argument errors into messages
// prefixed by the file name and exit status 2.
template <typename F>
int guarded(const std::string& path, std::ostream& err, F body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << "\n";
  } catch (const TypeError& e) {
    err << path << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
  }
  return kError;
}

}  // namespace

int run_check(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(path, err, [&] {
    const Program prog = load(path);
    for (const auto& c : prog.checks) {
      typecheck(c.lhs, &prog.alphabet);
      typecheck(c.rhs, &prog.alphabet);
    }
    int status = kOk;
    for (const auto& c : prog.checks) {
      const Verdict v = [&] {
        try {
          return equal(c.lhs, c.rhs, &prog.alphabet);
        } catch (const TypeError& e) {
          if (e.loc().known()) throw;
          throw TypeError(c.loc, e.what());
        }
      }();
      out << path << ":" << c.loc.str() << ": " << (v.equal ? "EQUAL" : "UNEQUAL");
      if (!v.equal) {
        status = kUnequal;
        const auto [i, j] = *v.diff;
        out << " at entry (" << i << ", " << j << ")\n"
            << "  left:  " << describe(v.lhs.at(i, j), prog.alphabet) << "\n"
            << "  right: " << describe(v.rhs.at(i, j), prog.alphabet);
      }
      out << "\n";
    }
    return status;
  });
}

int run_normalize(const std::string& path, const std::string& name, std::ostream& out, std::ostream& err) {
  return guarded(path, err, [&] {
    const Program prog = load(path);
    const Term& t = lookup(prog, name);
    typecheck(t, &prog.alphabet);
    out << to_json(matrix_form(t), prog.alphabet).dump(2) << "\n";
    return kOk;
  });
}

int run_render(const std::string& path, const std::string& name, const std::string& format,
               const std::string& direction, const std::string& output, std::ostream& out, std::ostream& err) {
  return guarded(path, err, [&] {
    const RenderFormat fmt = parse_render_format(format);
    const Direction dir = parse_direction(direction);
    const Program prog = load(path);
    const Term& t = lookup(prog, name);
    typecheck(t, &prog.alphabet);
    const std::string drawing = render(H(t), prog.alphabet, fmt, dir);
    if (output.empty()) {
      out << drawing;
      return kOk;
    }
    std::ofstream file(output, std::ios::binary);
    if (!(file << drawing)) throw std::runtime_error("cannot write '" + output + "'");
    return kOk;
  });
}

int run_protocol(const std::string& name, bool oracle, bool show, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (name == "all") {
    names = protocol_names();
  } else {
    bool known = false;
    for (const auto& n : protocol_names()) known = known || n == name;
    if (!known) {
      err << "unknown protocol '" << name << "' (expected teleportation, swap, superdense or all)\n";
      return kError;
    }
    names = {name};
  }
  const Alphabet al = Alphabet::standard();
  const Assignment pauli = pauli_assignment();
  int status = kOk;
  for (const auto& n : names) {
    const ProtocolReport r = verify(n);
    out << std::left << std::setw(14) << n << (r.equal() ? "EQUAL" : "UNEQUAL") << "  " << std::fixed
        << std::setprecision(3) << r.elapsed.count() * 1000.0 << " ms";
    if (!r.equal()) {
      status = kUnequal;
      const auto [i, j] = *r.verdict.diff;
      out << "  first difference at (" << i << ", " << j << ")";
    }
    if (oracle) {
      const double d = max_difference(eval_numeric(r.legs.left, pauli), eval_numeric(r.legs.right, pauli));
      const bool ok = d <= 1e-9;
      out << "  numeric " << (ok ? "agree" : "DISAGREE") << " (max deviation " << std::scientific
          << std::setprecision(2) << d << ")";
      if (!ok) status = kUnequal;
    }
    out << "\n";
    if (show) {
      if (auto v = r.common_value()) {
        for (std::size_t i = 0; i < v->rows(); ++i) {
          for (std::size_t j = 0; j < v->cols(); ++j) {
            out << "  (" << i << ", " << j << ")  " << describe(v->at(i, j), al) << "\n";
          }
        }
      }
    }
  }
  return status;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equality checker for dagger compact closed categories with biproducts"};
  app.require_subcommand(1);

  std::string file;
  std::string name;
  std::string format = "svg";
  std::string direction = "down";
  std::string output;
  bool oracle = false;
  bool show = false;

  auto* check = app.add_subcommand("check", "Decide every check statement in a .ccc file");
  check->add_option("file", file, "Input file")->required();

  auto* normalize = app.add_subcommand("normalize", "Print the matrix form of a definition as JSON");
  normalize->add_option("file", file, "Input file")->required();
  normalize->add_option("name", name, "Definition name")->required();

  auto* rend = app.add_subcommand("render", "Draw the cobordism matrix of a definition");
  rend->add_option("file", file, "Input file")->required();
  rend->add_option("name", name, "Definition name")->required();
  rend->add_option("--format", format, "svg, dot or json")->capture_default_str();
  rend->add_option("--direction", direction, "down (sources on top) or up")->capture_default_str();
  rend->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* proto = app.add_subcommand("protocol", "Verify a bundled protocol diagram");
  proto->add_option("name", name, "teleportation, swap, superdense or all")->required();
  proto->add_flag("--oracle", oracle, "Also compare both legs numerically under the Pauli assignment");
  proto->add_flag("--show", show, "Print the common value of both legs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kError;
  }

  if (check->parsed()) return run_check(file, out, err);
  if (normalize->parsed()) return run_normalize(file, name, out, err);
  if (rend->parsed()) return run_render(file, name, format, direction, output, out, err);
  return run_protocol(name, oracle, show, out, err);
}

}  // namespace dcc::cli
