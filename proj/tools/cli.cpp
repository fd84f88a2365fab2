#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "conseq/cell_dist.hpp"
#include "conseq/closure.hpp"
#include "conseq/event_seq.hpp"
#include "conseq/freq_seq.hpp"
#include "conseq/io.hpp"
#include "conseq/stats.hpp"

namespace conseq::cli {

namespace {

// Raised for flag combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string p, low, high, probs, format, variant = "canonical";
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t language_size = 0;
  std::uint64_t seed = 42;
  double alpha = 0.01;
  bool family = false, all_maps = false, product = false;
};

Probability require_probability(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return Probability::parse(text);
}

void emit_rows(std::ostream& out, const std::string& format, const std::string& csv,
               const std::vector<io::Json>& json) {
  out << (format == "json" ? io::ndjson(json) : csv);
}

int gen_seq(const Options& o, std::ostream& out) {
  CumulativeSequence seq;
  if (o.variant == "canonical") {
    seq = build_ap_prefix(require_probability(o.p, "--p"), o.n);
  } else if (o.variant == "p0" || o.variant == "p1") {
    if (o.m == 0) throw UsageError("--m is required for variant " + o.variant);
    seq = o.variant == "p0" ? variant_p0(o.m, o.n) : variant_p1(o.m, o.n);
  } else if (o.variant == "freeze") {
    if (o.m == 0) throw UsageError("--m is required for variant freeze");
    auto p = require_probability(o.p, "--p");
    seq = truncate_freeze(build_ap_prefix(p, o.m), o.m, o.n);
  } else {  // backshift
    if (o.m == 0) throw UsageError("--m is required for variant backshift");
    seq = backshift_variant(build_ap_prefix(require_probability(o.p, "--p"), o.n), o.m);
  }
  emit_rows(out, o.format, io::sequence_csv(seq), io::sequence_json(seq));
  return kExitOk;
}

int gen_nonconv(const Options& o, std::ostream& out) {
  auto low = require_probability(o.low, "--low");
  auto high = require_probability(o.high, "--high");
  auto result = build_nonconvergent(low, high, o.n);
  emit_rows(out, o.format, io::sequence_csv(result.seq), io::sequence_json(result.seq));
  return kExitOk;
}

int gen_dist(const Options& o, std::ostream& out) {
  if (o.probs.empty()) throw UsageError("--probs is required");
  auto cells = build_cell_sequences(ProbabilityVector::parse(o.probs), o.n);
  emit_rows(out, o.format, io::cells_csv(cells), io::cells_json(cells));
  return kExitOk;
}

int realize_cmd(const Options& o, std::ostream& out) {
  auto p = require_probability(o.p, "--p");
  auto trace = realize_trace(p, o.n);
  if (o.format == "json") {
    out << io::ndjson(io::trace_json(trace));
  } else {
    out << to_string(trial_operator(p, o.n)) << '\n' << to_string(trace) << '\n';
  }
  return kExitOk;
}

template <class Element>
bool print_report(std::ostream& out, const BasicAxiomReport<Element>& report, bool axiomless) {
  out << "axiom_i " << (report.axiom_i ? "PASS" : "FAIL") << '\n';
  out << "axiom_ii " << (report.axiom_ii ? "PASS" : "FAIL") << '\n';
  out << "axiom_iii " << (report.axiom_iii ? "PASS" : "FAIL") << '\n';
  out << "axiomless " << (axiomless ? "PASS" : "FAIL") << '\n';
  return report.all() && axiomless;
}

bool check_family(std::size_t size, std::ostream& out) {
  if (size == 0 || size > kMaxExtensionalElements) {
    throw UsageError("--language-size must be 1..12");
  }
  const auto language = Language::trial_language(size);
  const auto statements = language.ordered();
  const std::size_t ops = std::size_t{1} << size;
  out << "family language_size=" << size << " operators=" << ops << '\n';

  // Merge per-operator reports; the first counterexample wins.
  AxiomReport merged;
  bool axiomless = true;
  std::string witness;
  for (std::size_t bits = 0; bits < ops; ++bits) {
    StatementSet x;
    for (std::size_t i = 0; i < size; ++i) {
      if (bits & (std::size_t{1} << i)) x.insert(statements[i]);
    }
    SourceConditionalOperator op(x);
    auto ext = extensionalize(op, language);
    auto report = check_axioms(ext);
    merged.axiom_i &= report.axiom_i;
    merged.axiom_ii &= report.axiom_ii;
    merged.axiom_iii &= report.axiom_iii;
    axiomless &= is_axiomless(ext);
    if (report.counterexample && witness.empty()) {
      witness = to_string(op) + " at " + to_string(report.counterexample->subset);
    }
  }
  bool ok = print_report(out, merged, axiomless);
  if (!witness.empty()) out << "counterexample " << witness << '\n';
  return ok;
}

bool check_all_maps(std::size_t size, std::ostream& out) {
  if (size == 0 || size > 2) throw UsageError("--all-maps needs --language-size 1 or 2");
  const bool ok = verify_monotone_redundancy(Language::trial_language(size));
  out << "all_maps language_size=" << size << " closure_and_finitary_imply_monotone "
      << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

bool check_product(std::size_t size, std::ostream& out) {
  if (size == 0 || size * size > kMaxExtensionalElements) {
    throw UsageError("--product needs --language-size 1..3");
  }
  const auto language = Language::trial_language(size);
  const auto statements = language.ordered();
  const std::size_t ops = std::size_t{1} << size;
  out << "product factors=2 factor_language_size=" << size << " pairs=" << ops * ops << '\n';

  std::vector<ExtensionalOperator> factors;
  for (std::size_t bits = 0; bits < ops; ++bits) {
    StatementSet x;
    for (std::size_t i = 0; i < size; ++i) {
      if (bits & (std::size_t{1} << i)) x.insert(statements[i]);
    }
    factors.push_back(extensionalize(SourceConditionalOperator(x), language));
  }
  ProductAxiomReport merged;
  bool axiomless = true;
  for (const auto& f1 : factors) {
    for (const auto& f2 : factors) {
      const ExtensionalOperator pair[] = {f1, f2};
      auto prod = product_extensional(pair);
      auto report = check_axioms(prod);
      merged.axiom_i &= report.axiom_i;
      merged.axiom_ii &= report.axiom_ii;
      merged.axiom_iii &= report.axiom_iii;
      axiomless &= is_axiomless(prod);
    }
  }
  return print_report(out, merged, axiomless);
}

int check_axioms_cmd(const Options& o, std::ostream& out) {
  if (!o.family && !o.all_maps && !o.product) {
    throw UsageError("check-axioms needs --family, --all-maps, or --product");
  }
  if (o.language_size == 0) throw UsageError("--language-size is required");
  bool ok = true;
  if (o.family) ok &= check_family(o.language_size, out);
  if (o.all_maps) ok &= check_all_maps(o.language_size, out);
  if (o.product) ok &= check_product(o.language_size, out);
  return ok ? kExitOk : kExitCheckFailed;
}

int compare_cmd(const Options& o, std::ostream& out) {
  auto p = require_probability(o.p, "--p");
  auto designed = to_binary(build_ap_prefix(p, o.n));
  auto reports = stats::compare(designed, p, o.seed, o.alpha);
  emit_rows(out, o.format, io::reports_csv(reports), io::reports_json(reports));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic frequency sequences and consequence operators", "conseq"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of trials")->required()->check(CLI::PositiveNumber);
  };
  // Empty format selects the verb's default (csv, or text for realize).
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };

  auto* gen_seq_cmd = app.add_subcommand("gen-seq", "cumulative sequence converging to p");
  gen_seq_cmd->add_option("--p", o.p, "probability num/den or decimal");
  gen_seq_cmd->add_option("--variant", o.variant, "canonical|p0|p1|freeze|backshift")
      ->check(CLI::IsMember({"canonical", "p0", "p1", "freeze", "backshift"}));
  gen_seq_cmd->add_option("--m", o.m, "variant parameter (rise/freeze/block index)");
  add_n(gen_seq_cmd);
  add_format(gen_seq_cmd, {"csv", "json"});

  auto* nonconv_cmd = app.add_subcommand("gen-nonconv", "oscillating sequence between two levels");
  nonconv_cmd->add_option("--low", o.low, "lower frequency level")->required();
  nonconv_cmd->add_option("--high", o.high, "upper frequency level")->required();
  add_n(nonconv_cmd);
  add_format(nonconv_cmd, {"csv", "json"});

  auto* dist_cmd = app.add_subcommand("gen-dist", "one-hot cell assignment");
  dist_cmd->add_option("--probs", o.probs, "comma-separated cell probabilities")->required();
  add_n(dist_cmd);
  add_format(dist_cmd, {"csv", "json"});

  auto* realize_sub = app.add_subcommand("realize", "labeled event trace via the joined operator");
  realize_sub->add_option("--p", o.p, "probability")->required();
  add_n(realize_sub);
  add_format(realize_sub, {"text", "json"});

  auto* axioms_cmd = app.add_subcommand("check-axioms", "exhaustive closure-axiom checks");
  axioms_cmd->add_flag("--family", o.family, "every C(X,{G}) over the language");
  axioms_cmd->add_flag("--all-maps", o.all_maps, "(i) and (iii) imply (ii) over all maps");
  axioms_cmd->add_flag("--product", o.product, "products of two family operators");
  axioms_cmd->add_option("--language-size", o.language_size, "statements in the language");

  auto* compare_sub = app.add_subcommand("compare", "designed vs seeded Bernoulli stream");
  compare_sub->add_option("--p", o.p, "probability")->required();
  add_n(compare_sub);
  compare_sub->add_option("--seed", o.seed, "PRNG seed");
  compare_sub->add_option("--alpha", o.alpha, "significance level (0.05 or 0.01)");
  add_format(compare_sub, {"csv", "json"});

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "conseq: unknown verb '" << args.front() << "'\n";
    return kExitUsage;
  }

  // CLI11 parses argv in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "conseq: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen_seq_cmd->parsed()) return gen_seq(o, out);
    if (nonconv_cmd->parsed()) return gen_nonconv(o, out);
    if (dist_cmd->parsed()) return gen_dist(o, out);
    if (realize_sub->parsed()) return realize_cmd(o, out);
    if (axioms_cmd->parsed()) return check_axioms_cmd(o, out);
    if (compare_sub->parsed()) return compare_cmd(o, out);
  } catch (const UsageError& e) {
    err << "conseq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "conseq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "conseq: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "conseq: no command\n";
  return kExitUsage;
}

}  // namespace conseq::cli
