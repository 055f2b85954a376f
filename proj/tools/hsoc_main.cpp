// Command-line front end: analyze / puncture / zeros / extend / quantum
// over code files, plus cyclic code file generation.

#include <iostream>

#include <CLI11.hpp>

#include "hsoc/report.hpp"

namespace {

struct Options {
  hsoc::RunConfig cfg;
  std::string format = "human";
};

void emit(const Options& opt, const hsoc::json& j,
          const std::function<void(std::ostream&)>& human) {
  if (opt.format == "json") std::cout << j.dump(2) << "\n";
  else human(std::cout);
}

hsoc::LinearCode load_code(const std::string& path) {
  return hsoc::read_input_file(path).code;
}

int run(int argc, char** argv) {
  CLI::App app{"Hermitian self-orthogonal truncations, puncture codes and "
               "quantum code parameters for linear codes over GF(q^2)"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--cap-words", opt.cfg.cap_words,
                 "max words for codeword/weight enumerations")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-points", opt.cfg.cap_points,
                 "max projective points for zero enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-subset", opt.cfg.cap_subset,
                 "max column-subset size for distance searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", opt.cfg.workers, "worker threads (0 = auto)");
  app.add_option("--seed", opt.cfg.seed, "seed echoed to sampling front ends");
  app.add_option("--format", opt.format, "output format: human | json")
      ->check(CLI::IsMember({"human", "json"}));

  std::string file;
  auto* analyze = app.add_subcommand("analyze",
      "dimensions, classification and the dimension identity");
  analyze->add_option("file", file, "code or cyclic file")->required();

  auto* puncture = app.add_subcommand("puncture", "puncture code basis and weights");
  puncture->add_option("file", file)->required();

  auto* zeros = app.add_subcommand("zeros", "common zeros of the forms vanishing on the columns");
  zeros->add_option("file", file)->required();

  auto* extend = app.add_subcommand("extend", "extensions creating Hermitian self-orthogonal truncations");
  extend->add_option("file", file)->required();

  auto* quantum = app.add_subcommand("quantum", "quantum code parameters from puncture words");
  quantum->add_option("file", file)->required();
  int weight = -1;
  bool all = false;
  unsigned best_d = 1;
  quantum->add_option("--weight", weight, "use the representative word of this weight");
  quantum->add_flag("--all", all, "survey every weight in P(C)");
  quantum->add_option("--best-d", best_d,
                      "check up to this many words per weight and keep the best distance")
      ->check(CLI::PositiveNumber);

  auto* cyclic = app.add_subcommand("cyclic", "write a code file from a cyclic construction");
  std::string cyc_file, gtext, fieldtext, outpath, trunc_range;
  std::size_t cyc_n = 0;
  bool take_dual = false;
  cyclic->add_option("--in", cyc_file, "read n, g and the field from a cyclic file");
  cyclic->add_option("--n", cyc_n, "code length");
  cyclic->add_option("--g", gtext, "generator polynomial in x (must divide x^n - 1)");
  cyclic->add_option("--field", fieldtext, "field spec, e.g. \"p=2 h=1\" or \"p=3 h=1 mod2=x^2-x-1\"");
  cyclic->add_flag("--dual", take_dual, "emit the dual code");
  cyclic->add_option("--truncate", trunc_range, "delete coordinates a..b (1-based, after --dual)");
  cyclic->add_option("-o,--output", outpath, "output code file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (analyze->parsed()) {
    auto C = load_code(file);
    auto r = hsoc::run_analyze(C, opt.cfg);
    emit(opt, hsoc::to_json(r, *C.F, file), [&](std::ostream& os) {
      hsoc::print_human(os, r, *C.F);
    });
    return 0;
  }
  if (puncture->parsed()) {
    auto C = load_code(file);
    auto r = hsoc::run_puncture(C, opt.cfg);
    emit(opt, hsoc::to_json(r, *C.F, file), [&](std::ostream& os) {
      hsoc::print_human(os, r, *C.F);
    });
    return 0;
  }
  if (zeros->parsed()) {
    auto C = load_code(file);
    auto r = hsoc::run_zeros(C, opt.cfg);
    emit(opt, hsoc::to_json(r, *C.F, file), [&](std::ostream& os) {
      hsoc::print_human(os, r, *C.F);
    });
    return 0;
  }
  if (extend->parsed()) {
    auto C = load_code(file);
    auto r = hsoc::extend(C, opt.cfg);
    emit(opt, hsoc::to_json(r, *C.F, file), [&](std::ostream& os) {
      hsoc::print_human(os, r, *C.F);
    });
    return 0;
  }
  if (quantum->parsed()) {
    if ((weight < 0) == !all)
      throw CLI::ValidationError("quantum", "pass exactly one of --weight or --all");
    auto C = load_code(file);
    auto rows = hsoc::quantum_survey(C, opt.cfg, best_d);
    if (weight >= 0) {
      std::vector<hsoc::SurveyRow> filtered;
      for (auto& r : rows)
        if (r.weight == weight) filtered.push_back(std::move(r));
      if (filtered.empty())
        throw hsoc::error("P(C) has no word of weight " + std::to_string(weight));
      rows = std::move(filtered);
    }
    emit(opt, hsoc::to_json(rows, *C.F, file), [&](std::ostream& os) {
      hsoc::print_human(os, rows, *C.F);
    });
    return 0;
  }
  if (cyclic->parsed()) {
    hsoc::FieldPtr F;
    hsoc::CyclicSpec spec;
    if (!cyc_file.empty()) {
      auto in = hsoc::read_input_file(cyc_file);
      if (in.kind != hsoc::LoadedInput::Kind::Cyclic)
        throw hsoc::parse_error("'" + cyc_file + "' is not a cyclic file");
      F = in.field;
      spec = in.cyclic;
    } else {
      if (cyc_n == 0 || gtext.empty() || fieldtext.empty())
        throw CLI::ValidationError("cyclic", "need --in, or all of --n, --g and --field");
      F = hsoc::parse_field_kv(hsoc::detail::split_kv("field " + fieldtext, 0), 0);
      spec.n = cyc_n;
      spec.g = hsoc::parse_poly_x(*F, gtext);
    }
    hsoc::LinearCode C = hsoc::cyclic_code(F, spec);
    std::vector<std::string> notes;
    {
      std::ostringstream d;
      d << "[" << C.n << "," << C.k << "] cyclic code over GF(" << F->q2() << ")";
      notes.push_back(d.str());
    }
    if (take_dual) {
      C = hsoc::dual(C);
      notes.back() += ", dualized";
    }
    if (!trunc_range.empty()) {
      auto dots = trunc_range.find("..");
      if (dots == std::string::npos)
        throw CLI::ValidationError("cyclic", "--truncate expects a..b");
      std::size_t a = 0, b = 0;
      try {
        a = std::stoull(trunc_range.substr(0, dots));
        b = std::stoull(trunc_range.substr(dots + 2));
      } catch (...) {
        throw CLI::ValidationError("cyclic", "--truncate expects integers a..b");
      }
      if (a < 1 || b < a || b > C.n)
        throw hsoc::parse_error("--truncate range outside 1.." + std::to_string(C.n));
      std::vector<std::size_t> keep;
      for (std::size_t j = 0; j < C.n; ++j)
        if (j + 1 < a || j + 1 > b) keep.push_back(j);
      C = hsoc::truncate(C, keep);
      notes.back() += ", coordinates " + std::to_string(a) + ".." +
                      std::to_string(b) + " deleted";
    }
    hsoc::write_code_file(outpath, C, notes);
    hsoc::json j;
    j["command"] = "cyclic";
    j["output"] = outpath;
    j["n"] = C.n;
    j["k"] = C.k;
    j["field"] = hsoc::field_json(*F);
    emit(opt, j, [&](std::ostream& os) {
      os << "wrote [" << C.n << "," << C.k << "] code to " << outpath << "\n";
    });
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hsoc::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hsoc::cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const hsoc::verify_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hsoc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
