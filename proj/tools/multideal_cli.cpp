// Copyright 2026 The multideal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// multideal: command-line front end over the C API.
//
//   multideal facets  IDEAL
//   multideal mult    -r 1/2 IDEAL [--json] [--verify]
//   multideal lct     IDEAL
//   multideal closure IDEAL [--json]
//   multideal plot2d  IDEAL [--csv]
//   multideal search  --dim 2 --max-exp 6 --max-gens 3 [--jobs N] [--diagonal]
//   multideal verify  [-r R] IDEAL
//
// IDEAL is inline text ("x^8, y^6"), a JSON document, --file PATH, or read
// from standard input when omitted.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "multideal/multideal.h"

namespace {

enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kParseFailure = 2,
  kZeroIdeal = 3,
  kVerifyFailure = 4,
};

int exit_code(mi_status status) {
  switch (status) {
    case MI_OK: return kOk;
    case MI_ERR_PARSE: return kParseFailure;
    case MI_ERR_ZERO_IDEAL: return kZeroIdeal;
    case MI_ERR_VERIFY_MISMATCH: return kVerifyFailure;
    default: return kFailure;
  }
}

struct IdealDeleter {
  void operator()(mi_ideal* p) const { mi_ideal_free(p); }
};
using IdealPtr = std::unique_ptr<mi_ideal, IdealDeleter>;

struct StringDeleter {
  void operator()(char* p) const { mi_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a specific exit code after reporting.
struct Exit {
  int code;
};

void check(mi_status status) {
  if (status == MI_OK) return;
  std::cerr << "multideal: " << mi_status_string(status) << ": "
            << mi_last_error() << "\n";
  throw Exit{exit_code(status)};
}

struct IdealSource {
  std::string inline_text;
  std::string file;
  int vars = 0;
};

IdealPtr load_ideal(const IdealSource& src) {
  std::string text;
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) {
      std::cerr << "multideal: cannot open " << src.file << "\n";
      throw Exit{kParseFailure};
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (!src.inline_text.empty()) {
    text = src.inline_text;
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  mi_ideal* raw = nullptr;
  check(mi_ideal_parse(text.c_str(), src.vars, &raw));
  return IdealPtr(raw);
}

void print_ideal(const mi_ideal* ideal, bool as_json) {
  char* raw = nullptr;
  check(as_json ? mi_ideal_to_json(ideal, &raw) : mi_ideal_to_text(ideal, &raw));
  OwnedString s(raw);
  std::cout << s.get() << "\n";
}

// Runs `produce(&out)` and prints the string it hands back.
template <class Produce>
void print_owned(Produce&& produce) {
  char* raw = nullptr;
  const mi_status status = produce(&raw);
  OwnedString s(raw);
  check(status);
  std::cout << s.get();
}

void run_verify(const mi_ideal* ideal, const char* r) {
  char* raw = nullptr;
  mi_status status = mi_verify(ideal, r, &raw);
  OwnedString diff(raw);
  if (status == MI_ERR_VERIFY_MISMATCH) {
    std::cout << diff.get();
    std::cerr << "multideal: " << mi_last_error() << "\n";
    throw Exit{kVerifyFailure};
  }
  check(status);
}

void add_ideal_options(CLI::App* cmd, IdealSource& src) {
  cmd->add_option("ideal", src.inline_text,
                  "Ideal as text (\"x^8, y^6\") or JSON; stdin if omitted");
  cmd->add_option("--file", src.file, "Read the ideal from a file");
  cmd->add_option("--vars", src.vars, "Number of variables (default: inferred)")
      ->check(CLI::PositiveNumber);
}

int search_sink(const char* record, void*) {
  std::cout << record << "\n" << std::flush;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplier ideals, log canonical thresholds and integral "
               "closures of monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mi_version()));

  IdealSource src;
  std::string coeff;
  bool as_json = false;
  bool as_csv = false;
  bool also_verify = false;
  int dim = 2, max_exp = 6, max_gens = 3, jobs = 1;
  bool diagonal = false;

  auto* facets = app.add_subcommand("facets", "Facets and vertices of the Newton polyhedron (JSON)");
  auto* mult = app.add_subcommand("mult", "Multiplier ideal J(r * a)");
  auto* lct = app.add_subcommand("lct", "Log canonical threshold and remoteness (JSON)");
  auto* closure = app.add_subcommand("closure", "Integral closure");
  auto* plot = app.add_subcommand("plot2d", "SVG (or CSV) picture of J(a) for two variables");
  auto* search = app.add_subcommand("search", "Distinct thresholds below 1 over a box of ideals (NDJSON)");
  auto* verify = app.add_subcommand("verify", "Cross-check facet results against the LP oracle");

  for (auto* cmd : {facets, mult, lct, closure, plot, verify}) add_ideal_options(cmd, src);
  mult->add_option("-r,--coeff", coeff, "Coefficient r as p or p/q")->required();
  verify->add_option("-r,--coeff", coeff, "Coefficient r as p or p/q (default 1)");
  for (auto* cmd : {mult, closure}) cmd->add_flag("--json", as_json, "Emit JSON");
  for (auto* cmd : {facets, mult, lct, closure})
    cmd->add_flag("--verify", also_verify, "Also run the LP cross-check");
  plot->add_flag("--csv", as_csv, "Emit CSV instead of SVG");
  search->add_option("--dim", dim, "Number of variables")->check(CLI::PositiveNumber);
  search->add_option("--max-exp", max_exp, "Largest exponent")->check(CLI::PositiveNumber);
  search->add_option("--max-gens", max_gens, "Largest number of generators")->check(CLI::PositiveNumber);
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--diagonal", diagonal, "Only diagonal ideals (x1^a1, ..., xn^an)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseFailure;
  }

  try {
    const char* r = coeff.empty() ? nullptr : coeff.c_str();
    if (*search) {
      check(mi_threshold_search(dim, max_exp, max_gens, diagonal, jobs,
                                search_sink, nullptr));
      return kOk;
    }
    IdealPtr ideal = load_ideal(src);
    if (*facets) {
      print_owned([&](char** out) { return mi_facets_json(ideal.get(), out); });
      std::cout << "\n";
    } else if (*mult) {
      mi_ideal* out = nullptr;
      check(mi_multiplier_ideal(ideal.get(), r, &out));
      print_ideal(IdealPtr(out).get(), as_json);
    } else if (*lct) {
      print_owned([&](char** out) { return mi_lct_json(ideal.get(), out); });
      std::cout << "\n";
    } else if (*closure) {
      mi_ideal* out = nullptr;
      check(mi_integral_closure(ideal.get(), &out));
      print_ideal(IdealPtr(out).get(), as_json);
    } else if (*plot) {
      print_owned([&](char** out) {
        return mi_plot2d(ideal.get(), nullptr, as_csv ? MI_PLOT_CSV : MI_PLOT_SVG,
                         out);
      });
    } else if (*verify) {
      run_verify(ideal.get(), r);
      return kOk;
    }
    if (also_verify) run_verify(ideal.get(), r);
  } catch (const Exit& e) {
    return e.code;
  }
  return kOk;
}
