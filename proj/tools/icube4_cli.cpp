// Batch front end over the library: counting with cross-checked methods,
// icube enumeration as line-delimited JSON, extension, decomposition, and
// the formula-versus-brute verification sweep. All results go to stdout,
// diagnostics to stderr. Exit codes: 0 success, 1 usage or malformed input,
// 2 method disagreement, 3 budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "icube4/counting.hpp"
#include "icube4/enumeration.hpp"
#include "icube4/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace icube4;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ICube parse_icube(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return icube_from_json(j);
}

std::string icube_text(const ICube& c) {
  std::string out;
  for (const IVec& v : c.vectors) {
    for (size_t t = 0; t < v.size(); ++t) {
      if (t) out += ' ';
      out += std::to_string(v[t]);
    }
    out += '\n';
  }
  return out;
}

void print_report(const CountReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(r).dump() << "\n";
    return;
  }
  std::cout << "f_" << r.m << "(" << r.N << ") closed      = " << r.closed << "\n";
  if (r.convolution)
    std::cout << "f_" << r.m << "(" << r.N << ") convolution = " << *r.convolution << "\n";
  if (r.brute)
    std::cout << "f_" << r.m << "(" << r.N << ") brute       = " << *r.brute << "\n";
  std::cout << (r.ok ? "ok" : "MISMATCH") << "\n";
}

int cmd_count(int m, i64 n, const std::string& method, const std::string& format,
              const EnumBudget& budget) {
  CountReport r;
  r.N = n;
  r.m = m;
  if (method == "all") {
    try {
      r = cross_check(m, n, true, budget);
    } catch (const MismatchError& e) {
      print_report(e.report(), format);
      std::cerr << e.what() << "\n";
      return 2;
    }
  } else {
    r.closed = count_icubes_closed(m, n);
    if (method == "convolution") {
      require(m >= 2, Errc::invalid_argument, "the convolution form needs m >= 2");
      r.convolution = count_icubes_convolution(m, n);
    } else if (method == "brute") {
      r.brute = count_icubes_brute(m, n, budget);
    } else {
      require(method == "closed", Errc::invalid_argument, "unknown method");
    }
    r.ok = (!r.convolution || *r.convolution == r.closed) && (!r.brute || *r.brute == r.closed);
  }
  print_report(r, format);
  return r.ok ? 0 : 2;
}

int cmd_enumerate(int m, i64 n, const std::string& format, const EnumBudget& budget) {
  auto cubes = enumerate_icubes(m, n, budget);
  for (const ICube& c : cubes) {
    if (format == "json")
      std::cout << to_json(c).dump() << "\n";
    else
      std::cout << icube_text(c) << "\n";
  }
  return 0;
}

int cmd_extend(const std::string& input, const std::string& format) {
  ICube c = parse_icube(read_input(input));
  ICube out;
  if (c.dim() == 4 && c.size() < 4)
    out = extend_z4(c);
  else if (c.size() == c.dim() - 1)
    out = extend_by_minors(c);
  else
    fail(Errc::invalid_argument,
         "no extension rule applies: need dimension 4 with m < 4, or m = n-1");
  if (format == "json")
    std::cout << to_json(out).dump() << "\n";
  else
    std::cout << icube_text(out);
  return 0;
}

int cmd_decompose(const std::string& input, const std::string& format) {
  ICube c = parse_icube(read_input(input));
  Decomposition d = decompose(c);
  if (format == "json") {
    std::cout << to_json(d).dump() << "\n";
    return 0;
  }
  std::cout << "dyadic_power   " << d.dyadic_power << "\n";
  if (d.eta) std::cout << "eta            " << to_text(*d.eta) << "\n";
  std::string perm;
  for (KElem g : d.coord_perm.image) perm += kelem_char(g);
  std::cout << "coord_perm     " << perm << "\n";
  std::cout << "scalar_content " << d.scalar_content << "\n";
  std::cout << "gamma          " << to_text(d.gamma) << "\n";
  std::cout << "delta          " << to_text(d.delta) << "\n";
  std::cout << "signs         ";
  for (int s : d.signs) std::cout << (s > 0 ? " +" : " -");
  std::cout << "\n";
  return 0;
}

int cmd_verify(i64 max_norm, EnumBudget budget) {
  require(max_norm >= 1, Errc::invalid_argument, "--max-norm must be positive");
  budget.max_norm = std::max(budget.max_norm, max_norm);
  const int checks = static_cast<int>(4 * max_norm);
  std::vector<std::string> bad;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (i64 n = 1; n <= max_norm; ++n) {
    for (int m = 1; m <= 4; ++m) {
      std::string msg;
      try {
        cross_check(m, n, true, budget);
      } catch (const MismatchError& e) {
        msg = to_json(e.report()).dump();
      } catch (const Error& e) {
        msg = std::string("check m=") + std::to_string(m) + " N=" + std::to_string(n) +
              " failed: " + e.what();
      }
      if (!msg.empty()) {
#ifdef _OPENMP
#pragma omp critical
#endif
        bad.push_back(msg);
      }
    }
  }
  if (bad.empty()) {
    std::cout << "OK " << checks << "/" << checks << " checks (m = 1..4, N <= " << max_norm
              << ")\n";
    return 0;
  }
  std::cout << "FAILED " << bad.size() << "/" << checks << " checks\n";
  for (const std::string& s : bad) std::cout << s << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic of orthogonal integer vector systems in Z^4"};
  app.require_subcommand(1);

  int m = 1;
  i64 n = 1;
  i64 max_norm = 30;
  std::string method = "all";
  std::string format = "json";
  std::string input = "-";
  i64 budget_norm = kDefaultIcubeNormBudget;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget_norm, "max norm for exhaustive searches")
        ->envname("ICUBE4_BUDGET");
  };

  CLI::App* count = app.add_subcommand("count", "count m-icubes of a given edge norm");
  count->add_option("-m,--m", m, "tuple size")->required()->check(CLI::Range(1, 4));
  count->add_option("-N,--norm", n, "edge norm")->required();
  count->add_option("--method", method, "closed | convolution | brute | all")
      ->check(CLI::IsMember({"closed", "convolution", "brute", "all"}));
  add_format(count);
  add_budget(count);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list m-icubes, one JSON per line");
  enumerate->add_option("-m,--m", m, "tuple size")->required()->check(CLI::Range(1, 4));
  enumerate->add_option("-N,--norm", n, "edge norm")->required();
  add_format(enumerate);
  add_budget(enumerate);

  CLI::App* extend = app.add_subcommand("extend", "extend an icube read as JSON");
  extend->add_option("input", input, "input path or - for stdin");
  add_format(extend);

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "certificate of an icube in Z^4");
  decompose_cmd->add_option("input", input, "input path or - for stdin");
  add_format(decompose_cmd);

  CLI::App* verify = app.add_subcommand("verify", "formula-vs-brute sweep up to a norm bound");
  verify->add_option("--max-norm", max_norm, "largest edge norm to check")->required();
  add_budget(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const EnumBudget budget{budget_norm, std::nullopt};
  try {
    if (app.got_subcommand(count)) return cmd_count(m, n, method, format, budget);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(m, n, format, budget);
    if (app.got_subcommand(extend)) return cmd_extend(input, format);
    if (app.got_subcommand(decompose_cmd)) return cmd_decompose(input, format);
    if (app.got_subcommand(verify)) return cmd_verify(max_norm, budget);
  } catch (const MismatchError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == Errc::budget_exceeded) return 3;
    if (e.code() == Errc::mismatch) return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 1;
}
