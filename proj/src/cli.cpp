#include "spectra/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectra/errors.hpp"
#include "spectra/fock.hpp"
#include "spectra/hilbert.hpp"
#include "spectra/identities.hpp"
#include "spectra/qseries.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

namespace {

double parse_double_strict(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw usage_error("malformed number: " + std::string(text));
  }
  return value;
}

std::string fmt(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string fmt(std::complex<double> z) {
  return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i";
}

std::vector<double> parse_csv_doubles(const std::string& text, int expected) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(parse_double_strict(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (expected >= 0 && static_cast<int>(out.size()) != expected) {
    throw usage_error("expected " + std::to_string(expected) +
                      " comma-separated values, got " + text);
  }
  return out;
}

std::vector<long> parse_csv_longs(const std::string& text, int expected) {
  std::vector<long> out;
  for (const double v : parse_csv_doubles(text, expected)) {
    out.push_back(static_cast<long>(v));
  }
  return out;
}

struct CommonFlags {
  std::string tau;
  std::string format = "plain";
  std::string out_path;
  double eps_tol = 0.0;  // 0: use the default
  int fixed_cutoff = 0;  // 0: adaptive
  int m_base = 0;
  std::string eta_sign = "+";
  std::string r_reading;
};

TruncationPolicy make_policy(const CommonFlags& flags) {
  TruncationPolicy policy;
  if (flags.eps_tol > 0.0) policy.tolerance = flags.eps_tol;
  if (flags.fixed_cutoff > 0) {
    policy.mode = TruncationPolicy::Mode::fixed;
    policy.lattice_cutoff = flags.fixed_cutoff;
  }
  return policy;
}

int eta_sign_value(const CommonFlags& flags) {
  if (flags.eta_sign == "+") return +1;
  if (flags.eta_sign == "-") return -1;
  throw usage_error("--eta-sign must be + or -");
}

ModularParameter require_tau(const CommonFlags& flags) {
  if (flags.tau.empty()) {
    throw usage_error("--tau is required for this command");
  }
  const std::complex<double> tau = parse_complex(flags.tau);
  return {tau.real(), tau.imag()};
}

void emit(const CommonFlags& flags, std::ostream& out,
          const std::string& text) {
  if (!flags.out_path.empty()) {
    std::ofstream file(flags.out_path, std::ios::binary);
    if (!file) throw usage_error("cannot open output file " + flags.out_path);
    file << text;
    return;
  }
  out << text;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  CommonFlags common;
  std::string function;
  std::string s;
  std::string variant = "plain";
};

RatioVariant parse_variant(const std::string& name) {
  if (name == "plain") return RatioVariant::plain;
  if (name == "conjugate") return RatioVariant::conjugate;
  if (name == "eta") return RatioVariant::eta_shifted;
  if (name == "conjugate-eta") return RatioVariant::conjugate_eta_shifted;
  throw usage_error("--variant must be plain|conjugate|eta|conjugate-eta");
}

int run_eval(const EvalArgs& args, std::ostream& out) {
  const ModularParameter tau = require_tau(args.common);
  const TruncationPolicy policy = make_policy(args.common);
  const int eta_sign = eta_sign_value(args.common);

  ValueWithTail value;
  if (args.function == "zgamma" || args.function == "ruelle" ||
      args.function == "zratio") {
    if (args.s.empty()) throw usage_error("--s is required for " + args.function);
    const SpectralPoint s{parse_complex(args.s)};
    if (args.function == "zgamma") {
      value = z_gamma_product(s, tau, policy);
    } else if (args.function == "ruelle") {
      value = ruelle(s, tau, policy);
    } else {
      value = z_ratio(s, tau, parse_variant(args.variant), policy, eta_sign);
    }
  } else if (args.function == "eta") {
    value = dedekind_eta(tau, policy);
  } else if (args.function == "f1" || args.function == "f2" ||
             args.function == "f3") {
    value = weber_f(args.function[1] - '0', tau, policy, args.common.m_base);
  } else {
    throw usage_error("unknown function " + args.function +
                      " (expected zgamma|ruelle|zratio|eta|f1|f2|f3)");
  }

  Conventions conv;
  conv.m_base = args.common.m_base;
  conv.eta_sign = eta_sign;

  std::ostringstream os;
  if (args.common.format == "json") {
    nlohmann::ordered_json j;
    j["function"] = args.function;
    j["tau"] = {{"re", tau.re()}, {"im", tau.im()}};
    if (!args.s.empty()) {
      const auto s = parse_complex(args.s);
      j["s"] = {{"re", s.real()}, {"im", s.imag()}};
    }
    j["value"] = {{"re", value.value.real()}, {"im", value.value.imag()}};
    j["tail"] = value.tail;
    j["conventions"] = conv.to_json();
    os << j.dump(2) << "\n";
  } else {
    os << "function = " << args.function << "\n";
    os << "tau = " << fmt(tau.tau()) << "\n";
    if (!args.s.empty()) os << "s = " << fmt(parse_complex(args.s)) << "\n";
    os << "value = " << fmt(value.value) << "\n";
    os << "tail = " << fmt(value.tail) << "\n";
    os << "conventions: m_base=" << conv.m_base
       << " eta_sign=" << (conv.eta_sign > 0 ? "+" : "-") << "\n";
  }
  emit(args.common, out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------

struct ExpandArgs {
  CommonFlags common;
  std::string series;
  long order = 16;
  long order_q = 6;
  long order_r = -1;
  std::string betti;
  std::string dims = "1,0";
  long euler = 1;
  long classes = 1;
};

std::string series_plain(const FormalSeries& series) {
  std::ostringstream os;
  os << "# grid 1/" << series.grid() << ", offset "
     << rational_to_string(series.offset()) << ", order "
     << rational_to_string(series.order()) << "\n";
  for (const auto& [k, c] : series.terms()) {
    os << rational_to_string(
              Rational(series.offset_units() + k, series.grid()))
       << "\t" << rational_to_string(c) << "\n";
  }
  return os.str();
}

int run_expand(const ExpandArgs& args, std::ostream& out) {
  const auto& name = args.series;
  std::ostringstream os;

  if (name == "goettsche") {
    if (args.betti.empty()) {
      throw usage_error("expand goettsche requires --betti b0,b1,b2,b3,b4");
    }
    const auto b = parse_csv_longs(args.betti, 5);
    const BettiVector betti{b[0], b[1], b[2], b[3], b[4]};
    const BivariateSeries series =
        goettsche_series(betti, args.order_q, args.order_r);
    if (args.common.format == "json") {
      os << series.to_json().dump(2) << "\n";
    } else {
      os << series.to_csv();
    }
    emit(args.common, out, os.str());
    return 0;
  }

  FormalSeries series = FormalSeries::one(1, 1);
  if (name == "partition") {
    series = partition_gf(args.order);
  } else if (name == "eta") {
    series = dedekind_eta_series(args.order);
  } else if (name == "f1" || name == "f2" || name == "f3") {
    series = weber_f_series(name[1] - '0', Rational(args.order),
                            FormalSeries::kDefaultGrid, args.common.m_base);
  } else if (name == "character") {
    const auto d = parse_csv_longs(args.dims, 2);
    series = super_character_series({d[0], d[1]}, args.order);
  } else if (name == "ktheory") {
    series = ktheory_euler_series({args.euler, 1}, args.order);
  } else if (name == "fock") {
    const auto d = parse_csv_longs(args.dims, 2);
    series = fock_graded_dim_series({d[0], d[1]}, args.order);
  } else if (name == "point") {
    series = point_case_series(args.classes, args.order);
  } else {
    throw usage_error(
        "unknown series " + name +
        " (expected partition|eta|f1|f2|f3|goettsche|character|ktheory|fock|"
        "point)");
  }

  if (args.common.format == "json") {
    os << series.to_json().dump(2) << "\n";
  } else if (args.common.format == "csv") {
    os << series.to_csv();
  } else {
    os << series_plain(series);
  }
  emit(args.common, out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  CommonFlags common;
  std::string suite = "all";
  std::string box;
  bool m_base_set = false;
  bool eta_sign_set = false;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
  SuiteOptions options;
  options.policy = make_policy(args.common);
  if (!args.common.tau.empty()) {
    const auto tau = parse_complex(args.common.tau);
    options.tau = ModularParameter(tau.real(), tau.imag());
  }
  if (args.m_base_set) options.m_base = args.common.m_base;
  if (args.eta_sign_set) options.eta_sign = eta_sign_value(args.common);
  if (!args.common.r_reading.empty()) {
    if (args.common.r_reading == "ratio") {
      options.r_reading = Conventions::RReading::ratio;
    } else if (args.common.r_reading == "triple") {
      options.r_reading = Conventions::RReading::triple;
    } else {
      throw usage_error("--r-reading must be ratio or triple");
    }
  }
  if (!args.box.empty()) {
    const auto b = parse_csv_doubles(args.box, 4);
    options.zero_box = Box{b[0], b[1], b[2], b[3]};
  }

  const SuiteResult result = run_suite(args.suite, options);

  std::ostringstream os;
  if (args.common.format == "plain") {
    for (const auto& report : result.reports) {
      os << (report.pass ? "PASS" : "FAIL") << (report.audit ? " (audit)" : "")
         << " " << report.id << " residual=" << fmt(report.residual)
         << " budget=" << fmt(report.tail_budget) << "\n";
    }
    os << (result.hard_pass ? "ALL HARD CHECKS PASS" : "HARD CHECK FAILURE")
       << " (" << result.reports.size() << " reports)\n";
  } else {
    os << result.to_json().dump(2) << "\n";
  }
  emit(args.common, out, os.str());
  return result.hard_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct ZerosArgs {
  CommonFlags common;
  std::string box = "-3.5,0.5,-7,7";
};

int run_zeros(const ZerosArgs& args, std::ostream& out) {
  const ModularParameter tau = args.common.tau.empty()
                                   ? ModularParameter(0.3, 1.1)
                                   : require_tau(args.common);
  const TruncationPolicy policy = make_policy(args.common);
  const auto b = parse_csv_doubles(args.box, 4);
  const auto zeros = zeros_predicted(tau, Box{b[0], b[1], b[2], b[3]});

  bool all_ok = true;
  std::ostringstream os;
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  if (args.common.format == "plain") {
    os << "n\tk1\tk2\tre\tim\tresidual\n";
  }
  for (const auto& [index, location] : zeros) {
    const ValueWithTail value = verify_zero(index, tau, policy);
    const double residual = std::abs(value.value);
    if (residual > value.tail + tolerances::zero_residual) all_ok = false;
    if (args.common.format == "plain") {
      os << index.n << "\t" << index.k1 << "\t" << index.k2 << "\t"
         << fmt(location.real()) << "\t" << fmt(location.imag()) << "\t"
         << fmt(residual) << "\n";
    } else {
      nlohmann::ordered_json j;
      j["n"] = index.n;
      j["k1"] = index.k1;
      j["k2"] = index.k2;
      j["zero"] = {{"re", location.real()}, {"im", location.imag()}};
      j["residual"] = residual;
      j["tail"] = value.tail;
      array.push_back(std::move(j));
    }
  }
  if (args.common.format != "plain") os << array.dump(2) << "\n";
  emit(args.common, out, os.str());
  return all_ok ? 0 : 1;
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--tau", flags.tau, "modular parameter, literal form a+bi");
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  cmd->add_option("--out", flags.out_path, "write output to a file");
  cmd->add_option("--eps", flags.eps_tol, "truncation tolerance override");
  cmd->add_option("--K", flags.fixed_cutoff,
                  "fixed lattice cutoff (disables adaptive truncation)");
  cmd->add_option("--m-base", flags.m_base, "first product index m")
      ->check(CLI::IsMember({0, 1}));
  cmd->add_option("--eta-sign", flags.eta_sign, "sign in eta = +-(2 tau)^{-1}")
      ->check(CLI::IsMember({"+", "-"}));
  cmd->add_option("--r-reading", flags.r_reading,
                  "Ruelle reading: two-factor ratio or three-factor product")
      ->check(CLI::IsMember({"ratio", "triple"}));
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) throw usage_error("empty complex literal");
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' &&
        text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const auto parse_imag_token = [](std::string_view token) {
    // token ends with 'i'; bare "i", "+i", "-i" mean +-1
    token.remove_suffix(1);
    if (token.empty() || token == "+") return 1.0;
    if (token == "-") return -1.0;
    return parse_double_strict(token);
  };
  if (split == std::string_view::npos) {
    if (text.back() == 'i' || text.back() == 'I') {
      return {0.0, parse_imag_token(text)};
    }
    return {parse_double_strict(text), 0.0};
  }
  std::string_view imag = text.substr(split);
  if (imag.back() != 'i' && imag.back() != 'I') {
    throw usage_error("malformed complex literal: " + std::string(text) +
                      " (expected a+bi)");
  }
  return {parse_double_strict(text.substr(0, split)), parse_imag_token(imag)};
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "spectraq: Patterson-Selberg / Ruelle spectral functions and the "
      "q-series they generate"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate a spectral function or modular product at tau");
  eval->add_option("function", eval_args.function,
                   "zgamma|ruelle|zratio|eta|f1|f2|f3")
      ->required();
  eval->add_option("--s", eval_args.s, "spectral argument, literal form a+bi");
  eval->add_option("--variant", eval_args.variant,
                   "zratio variant: plain|conjugate|eta|conjugate-eta");
  add_common_flags(eval, eval_args.common);

  ExpandArgs expand_args;
  CLI::App* expand = app.add_subcommand(
      "expand", "exact series coefficients on the rational exponent grid");
  expand->add_option("series", expand_args.series,
                     "partition|eta|f1|f2|f3|goettsche|character|ktheory|"
                     "fock|point")
      ->required();
  expand->add_option("--order", expand_args.order, "truncation order");
  expand->add_option("--order-q", expand_args.order_q,
                     "q truncation (goettsche)");
  expand->add_option("--order-r", expand_args.order_r,
                     "r truncation (goettsche, default: keep everything)");
  expand->add_option("--betti", expand_args.betti, "b0,b1,b2,b3,b4");
  expand->add_option("--dims", expand_args.dims,
                     "graded dimensions even,odd (character/fock)");
  expand->add_option("--euler", expand_args.euler,
                     "orbifold Euler number (ktheory)");
  expand->add_option("--classes", expand_args.classes,
                     "conjugacy class count (point)");
  add_common_flags(expand, expand_args.common);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "run an identity verification suite (reports as JSON)");
  verify->add_option("suite", verify_args.suite,
                     "all|table1|ftriple|ruelletriple|eulerbracket|crossz|"
                     "zeros|goettsche-spectral");
  verify->add_option("--box", verify_args.box,
                     "zero search box re0,re1,im0,im1");
  add_common_flags(verify, verify_args.common);
  verify_args.common.format = "json";

  ZerosArgs zeros_args;
  CLI::App* zeros = app.add_subcommand(
      "zeros", "predicted zero lattice and truncated-product residuals");
  zeros->add_option("--box", zeros_args.box, "search box re0,re1,im0,im1");
  add_common_flags(zeros, zeros_args.common);

  ExpandArgs hilbert_args;
  hilbert_args.series = "goettsche";
  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "Betti table of the Hilbert schemes of points (alias of "
                 "expand goettsche)");
  hilbert->add_option("--betti", hilbert_args.betti, "b0,b1,b2,b3,b4")
      ->required();
  hilbert->add_option("--order-q", hilbert_args.order_q, "q truncation");
  hilbert->add_option("--order-r", hilbert_args.order_r, "r truncation");
  add_common_flags(hilbert, hilbert_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(eval_args, out);
    if (app.got_subcommand(expand)) return run_expand(expand_args, out);
    if (app.got_subcommand(verify)) {
      // detect whether convention restrictions were given
      verify_args.m_base_set = verify->count("--m-base") > 0;
      verify_args.eta_sign_set = verify->count("--eta-sign") > 0;
      return run_verify(verify_args, out);
    }
    if (app.got_subcommand(zeros)) return run_zeros(zeros_args, out);
    if (app.got_subcommand(hilbert)) return run_expand(hilbert_args, out);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace spectra
