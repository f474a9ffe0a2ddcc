#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "horadam/cli.hpp"

namespace horadam::cli {

using nlohmann::json;

namespace {

/// Flag values as given; unset flags leave the layered config untouched.
struct FlagValues {
  std::optional<std::string> a, b, p, q, m, s, l, t, family, n, from, to, eps, format, digits, threads;
  bool alternating = false;
  std::optional<std::string> preset, config, footer;
};

std::int64_t parse_int64(const std::string& text, std::string_view flag) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidArgument, "--" + std::string(flag) + " expects an integer (got '" + text + "')");
  }
  return v;
}

Integer parse_integer(const std::string& text, std::string_view flag) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, "--" + std::string(flag) + " expects an integer (got '" + text + "')");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

void add_flags(CLI::App& cmd, FlagValues& f) {
  cmd.add_option("--a", f.a, "W_0");
  cmd.add_option("--b", f.b, "W_1");
  cmd.add_option("--p", f.p, "recurrence coefficient p >= 1");
  cmd.add_option("--q", f.q, "recurrence coefficient q");
  cmd.add_option("--m", f.m, "stride m >= 1");
  cmd.add_option("--s", f.s, "weights s_i, comma separated");
  cmd.add_option("--l", f.l, "offsets l_i, comma separated (use --l=-1,0 for a leading minus)");
  cmd.add_option("--t", f.t, "block length t (block family)");
  cmd.add_flag("--alternating", f.alternating, "alternate the signs (-1)^k");
  cmd.add_option("--family", f.family, "general or block");
  cmd.add_option("--n", f.n, "lower summation index");
  cmd.add_option("--from", f.from, "first index of the range");
  cmd.add_option("--to", f.to, "last index of the range");
  cmd.add_option("--eps", f.eps, "enclosure width, exact decimal");
  cmd.add_option("--format", f.format, "csv or json");
  cmd.add_option("--digits", f.digits, "fractional digits of decimal renderings");
  cmd.add_option("--threads", f.threads, "rows evaluated concurrently (verify)");
  cmd.add_option("--preset", f.preset, "named parameter bundle");
  cmd.add_option("--config", f.config, "JSON file of RunConfig fields");
}

RunConfig layered_config(const FlagValues& f) {
  json file;
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config file '" + *f.config + "'");
    try {
      file = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, "config file '" + *f.config + "' is not valid JSON: " + e.what());
    }
    if (!file.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
  }

  RunConfig c;
  if (f.preset) {
    c = preset(*f.preset);
  } else if (file.contains("preset")) {
    if (!file["preset"].is_string()) throw Error(ErrorCode::InvalidArgument, "config field 'preset' must be a string");
    c = preset(file["preset"].get<std::string>());
  }
  if (f.config) {
    try {
      c = config_from_json(file, c);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, std::string("config field has the wrong type: ") + e.what());
    }
  }

  if (f.a) c.a = parse_integer(*f.a, "a");
  if (f.b) c.b = parse_integer(*f.b, "b");
  if (f.p) c.p = parse_integer(*f.p, "p");
  if (f.q) c.q = parse_integer(*f.q, "q");
  if (f.m) c.m = parse_int64(*f.m, "m");
  if (f.s) {
    c.s.clear();
    for (const auto& item : split_list(*f.s)) c.s.push_back(parse_integer(item, "s"));
  }
  if (f.l) {
    c.l.clear();
    for (const auto& item : split_list(*f.l)) c.l.push_back(parse_int64(item, "l"));
  }
  if (f.t) c.t = parse_int64(*f.t, "t");
  if (f.alternating) c.alternating = true;
  if (f.family) c.family = *f.family;
  if (f.n) c.n = parse_int64(*f.n, "n");
  if (f.from) c.n_start = parse_int64(*f.from, "from");
  if (f.to) c.n_end = parse_int64(*f.to, "to");
  if (f.eps) c.eps = *f.eps;
  if (f.format) {
    if (*f.format != "csv" && *f.format != "json") {
      throw Error(ErrorCode::InvalidArgument, "--format must be csv or json (got '" + *f.format + "')");
    }
    c.output = *f.format == "csv" ? OutputFormat::csv : OutputFormat::json;
  }
  if (f.digits) c.digits = static_cast<int>(parse_int64(*f.digits, "digits"));
  if (f.threads) c.threads = static_cast<unsigned>(std::max<std::int64_t>(1, parse_int64(*f.threads, "threads")));

  if (c.digits < 0 || c.digits > 10000) throw Error(ErrorCode::InvalidArgument, "digits must lie in [0, 10000]");
  if (c.n_start > c.n_end) throw Error(ErrorCode::InvalidArgument, "range must satisfy from <= to");
  family_of(c);
  eps_of(c);
  return c;
}

std::string estimate_text(const EstimateValue& v, const Rational& eps, int digits) {
  if (v.is_integer()) return v.integer().get_str();
  return v.exact_string() + "~" + decimal_string(v.enclose(eps).midpoint(), digits);
}

json interval_json(const RationalInterval& x, int digits) {
  return json{{"lo", fraction_string(x.lo())},
              {"hi", fraction_string(x.hi())},
              {"lo_decimal", decimal_string(x.lo(), digits)},
              {"hi_decimal", decimal_string(x.hi(), digits)}};
}

int cmd_seq(const RunConfig& c, std::ostream& out) {
  const auto params = params_of(c);
  if (c.n_start < 0) throw Error(ErrorCode::InvalidArgument, "sequence indices must satisfy from >= 0");
  const auto values = w_range(params, c.n_start, c.n_end);
  if (c.output == OutputFormat::csv) {
    out << "n,W\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << c.n_start + static_cast<std::int64_t>(i) << ',' << values[i] << '\n';
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      rows.push_back({{"n", c.n_start + static_cast<std::int64_t>(i)}, {"W", values[i].get_str()}});
    }
    out << rows.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  const auto report = validity_check(params_of(c), selector_of(c));
  const json j{{"d_positive", report.d_positive},
               {"alpha_gt_one", report.alpha_gt_one},
               {"beta_abs_lt_one", report.beta_abs_lt_one},
               {"polynomial_condition_holds", report.polynomial_condition_holds},
               {"c1_nonzero", report.c1_nonzero},
               {"leading_coefficient_nonzero", report.leading_coefficient_nonzero},
               {"overall", report.overall}};
  out << j.dump(2) << '\n';
  return report.overall ? kExitOk : kExitValidity;
}

int cmd_sum(const RunConfig& c, std::ostream& out) {
  const SumSpec spec{params_of(c), selector_of(c), c.alternating, c.n};
  const auto tail = sum_enclosure(spec, eps_of(c));
  const auto inverse = inverse_enclosure(tail);
  if (c.output == OutputFormat::csv) {
    out << "n,sum_lo,sum_hi,inv_lo,inv_hi,sum_lo_decimal,sum_hi_decimal,inv_lo_decimal,inv_hi_decimal,terms_used\n";
    out << c.n << ',' << fraction_string(tail.interval.lo()) << ',' << fraction_string(tail.interval.hi()) << ','
        << fraction_string(inverse.lo()) << ',' << fraction_string(inverse.hi()) << ','
        << decimal_string(tail.interval.lo(), c.digits) << ',' << decimal_string(tail.interval.hi(), c.digits) << ','
        << decimal_string(inverse.lo(), c.digits) << ',' << decimal_string(inverse.hi(), c.digits) << ','
        << tail.terms_used << '\n';
  } else {
    const json j{{"n", c.n},
                 {"sum", interval_json(tail.interval, c.digits)},
                 {"inverse", interval_json(inverse, c.digits)},
                 {"terms_used", tail.terms_used},
                 {"bound", tail.bound_kind == BoundKind::geometric ? "geometric" : "alternating"}};
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

EstimateValue estimate_of(const RunConfig& c, std::int64_t n) {
  const auto params = params_of(c);
  const auto sel = selector_of(c);
  switch (family_of(c)) {
    case EstimateFamily::plain_general: return estimate_general(params, sel, n);
    case EstimateFamily::alt_general: return estimate_alternating(params, sel, n);
    case EstimateFamily::plain_block: return estimate_block(params, sel.stride(), *sel.block_length(), n);
    case EstimateFamily::alt_block: return estimate_block_alternating(params, sel.stride(), *sel.block_length(), n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

int cmd_estimate(const RunConfig& c, std::ostream& out) {
  const auto value = estimate_of(c, c.n);
  const auto eps = eps_of(c);
  const std::string decimal = value.is_integer() ? value.integer().get_str()
                                                 : decimal_string(value.enclose(eps).midpoint(), c.digits);
  if (c.output == OutputFormat::csv) {
    out << "n,estimate,decimal\n" << c.n << ',' << value.exact_string() << ',' << decimal << '\n';
  } else {
    const json j{{"n", c.n},
                 {"kind", value.is_integer() ? "exact_integer" : "field_valued"},
                 {"estimate", value.exact_string()},
                 {"decimal", decimal}};
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

json footer_json(const RunConfig& c, const std::vector<VerificationRow>& rows, const RecurrenceParams& params,
                 EstimateFamily family) {
  json footer{{"family", to_string(family)}, {"rows", rows.size()}};
  if (rows.empty()) return footer;
  try {
    const auto fit = decay_fit(rows, spectral(params), c.m);
    footer["decay_fit"] = {{"status", "ok"},
                           {"ratio_estimate", decimal_string(fit.ratio_estimate, 12)},
                           {"predicted_ratio_lo", decimal_string(fit.predicted_ratio.lo(), 12)},
                           {"predicted_ratio_hi", decimal_string(fit.predicted_ratio.hi(), 12)},
                           {"r_squared", decimal_string(fit.r_squared, 12)},
                           {"rows_used", fit.rows_used},
                           {"agrees_within_15_percent", fit.agrees(Rational(3, 20))}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateErrors && e.code() != ErrorCode::InsufficientData) throw;
    footer["decay_fit"] = {{"status", e.code() == ErrorCode::DegenerateErrors ? "exact" : "insufficient_data"},
                           {"message", e.what()}};
  }
  if (is_block(family)) {
    footer["round_identity"] = {{"status", "field_valued_estimate"}, {"onset", nullptr}};
  } else {
    const auto scan = round_identity_onset(rows);
    footer["round_identity"] = {{"status", "ok"},
                                {"onset", scan.onset ? json(*scan.onset) : json(nullptr)},
                                {"first", scan.first},
                                {"last", scan.last}};
  }
  return footer;
}

int cmd_verify(const RunConfig& c, const std::optional<std::string>& footer_path, std::ostream& out,
               std::ostream& err) {
  const auto params = params_of(c);
  const auto sel = selector_of(c);
  const auto family = family_of(c);
  const auto eps = eps_of(c);

  bool first_row = true;
  VerifyOptions options;
  options.threads = c.threads;
  options.on_row = [&](const VerificationRow& r) {
    if (c.output == OutputFormat::csv) {
      out << r.n << ',' << fraction_string(r.sum.lo()) << ',' << fraction_string(r.sum.hi()) << ','
          << fraction_string(r.inverse.lo()) << ',' << fraction_string(r.inverse.hi()) << ','
          << estimate_text(r.estimate, eps, c.digits) << ',' << fraction_string(r.error.lo()) << ','
          << fraction_string(r.error.hi()) << '\n';
    } else {
      const json j{{"n", r.n},
                   {"sum_lo", fraction_string(r.sum.lo())},
                   {"sum_hi", fraction_string(r.sum.hi())},
                   {"inv_lo", fraction_string(r.inverse.lo())},
                   {"inv_hi", fraction_string(r.inverse.hi())},
                   {"estimate", estimate_text(r.estimate, eps, c.digits)},
                   {"err_lo", fraction_string(r.error.lo())},
                   {"err_hi", fraction_string(r.error.hi())},
                   {"err_mid_decimal", decimal_string(r.error.midpoint(), c.digits)}};
      out << (first_row ? "[\n" : ",\n") << j.dump();
    }
    first_row = false;
    out.flush();
  };
  auto close_table = [&] {
    if (c.output == OutputFormat::json) out << (first_row ? "[\n" : "\n") << "]\n";
    out.flush();
  };

  if (c.output == OutputFormat::csv) out << "n,sum_lo,sum_hi,inv_lo,inv_hi,estimate,err_lo,err_hi\n";
  std::vector<VerificationRow> rows;
  try {
    rows = verify_run(params, sel, family, c.n_start, c.n_end, eps, options);
  } catch (...) {
    close_table();
    throw;
  }
  close_table();

  const json footer = footer_json(c, rows, params, family);
  if (footer_path) {
    std::ofstream f(*footer_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write footer file '" + *footer_path + "'");
    f << footer.dump(2) << '\n';
  } else {
    err << footer.dump(2) << '\n';
  }
  return kExitOk;
}

std::string describe(const Error& e) {
  std::string text = e.what();
  if (e.index()) text += " (k=" + std::to_string(*e.index()) + ")";
  if (e.row()) text += " (n=" + std::to_string(*e.row()) + ")";
  return text;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return kExitConfig;
    case ErrorCode::InvalidSpec:
    case ErrorCode::NonPositiveDiscriminant:
    case ErrorCode::AlphaEqualsOne:
      return kExitValidity;
    case ErrorCode::ZeroDenominatorTerm:
    case ErrorCode::NonPositiveDenominator:
    case ErrorCode::MonotonicityNotEstablished:
    case ErrorCode::IntervalStraddlesZero:
      return kExitSeries;
    default:
      return kExitInternal;
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Horadam reciprocal-sum enclosures and asymptotic estimates", "horadam"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"seq", "print n,W_n over --from..--to"},
      {"validate", "report the convergence hypotheses as JSON (exit 3 when they fail)"},
      {"sum", "enclose S_n and its inverse"},
      {"estimate", "evaluate the closed-form estimate B_n"},
      {"verify", "tabulate errors inverse - B_n over --from..--to"},
  };
  std::map<std::string, FlagValues> flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    add_flags(*sub, flags[cmd.name]);
    subs[cmd.name] = sub;
  }
  subs["verify"]->add_option("--footer", flags["verify"].footer, "write the JSON footer here instead of stderr");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("horadam");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      const FlagValues& f = flags[name];
      const RunConfig config = layered_config(f);
      if (name == "seq") return cmd_seq(config, out);
      if (name == "validate") return cmd_validate(config, out);
      if (name == "sum") return cmd_sum(config, out);
      if (name == "estimate") return cmd_estimate(config, out);
      if (name == "verify") return cmd_verify(config, f.footer, out, err);
    }
  } catch (const Error& e) {
    out.flush();
    err << "error: " << describe(e) << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace horadam::cli
