#include "conseq/closure.hpp"

#include <sstream>

namespace conseq {

SourceConditionalOperator::SourceConditionalOperator(StatementSet attachments, Statement source)
    : attachments_(std::move(attachments)), source_(source) {
  if (!source_.is_source()) throw std::invalid_argument("operator source must be G");
}

StatementSet apply(const SourceConditionalOperator& op, const StatementSet& y) {
  if (!y.contains(op.source())) return y;
  StatementSet out = y;
  out.insert(op.attachments().begin(), op.attachments().end());
  return out;
}

StatementSet realize(const SourceConditionalOperator& op, const StatementSet& y) {
  StatementSet out;
  for (const auto& s : conseq::apply(op, y)) {
    if (!y.contains(s)) out.insert(s);
  }
  return out;
}

SourceConditionalOperator join_family(const SourceConditionalOperator& a,
                                      const SourceConditionalOperator& b) {
  if (!(a.source() == b.source())) throw std::invalid_argument("join of mismatched sources");
  StatementSet x = a.attachments();
  x.insert(b.attachments().begin(), b.attachments().end());
  return SourceConditionalOperator(std::move(x), a.source());
}

std::string to_string(const SourceConditionalOperator& op) {
  return "C(" + to_string(op.attachments()) + "," + to_string(StatementSet{op.source()}) + ")";
}

namespace {

StatementSet parse_set(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("malformed statement set: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  StatementSet out;
  while (!text.empty()) {
    auto comma = text.find(',');
    out.insert(Statement::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

SourceConditionalOperator parse_operator(std::string_view text) {
  if (!text.starts_with("C(") || !text.ends_with(")")) {
    throw std::invalid_argument("malformed operator: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(2, text.size() - 3);
  auto split = body.find("},{");
  if (split == std::string_view::npos) {
    throw std::invalid_argument("malformed operator: '" + std::string(text) + "'");
  }
  StatementSet attachments = parse_set(body.substr(0, split + 1));
  StatementSet source = parse_set(body.substr(split + 2));
  if (source.size() != 1) throw std::invalid_argument("operator needs exactly one source");
  return SourceConditionalOperator(std::move(attachments), *source.begin());
}

ExtensionalOperator extensionalize(const SourceConditionalOperator& op, const Language& language) {
  if (language.size() > kMaxExtensionalElements) {
    throw std::length_error("extensional operators are capped at 12 elements");
  }
  if (!language.contains(op.source())) throw std::invalid_argument("source outside language");
  for (const auto& s : op.attachments()) {
    if (!language.contains(s)) throw std::invalid_argument("attachment outside language");
  }
  return ExtensionalOperator::tabulate(language.ordered(),
                                       [&](const StatementSet& y) { return conseq::apply(op, y); });
}

ExtensionalOperator lub_extensional(const ExtensionalOperator& a, const ExtensionalOperator& b) {
  if (a.universe() != b.universe()) throw std::invalid_argument("lub over different universes");
  for (const auto* op : {&a, &b}) {
    auto report = check_axioms(*op);
    if (!report.axiom_i || !report.axiom_ii) {
      throw std::invalid_argument("lub requires closure operators satisfying (i) and (ii)");
    }
  }
  std::vector<Mask> table(a.subset_count());
  for (std::size_t y = 0; y < table.size(); ++y) {
    // Strictly growing until fixed, so at most |L| + 1 rounds.
    Mask z = static_cast<Mask>(y);
    for (;;) {
      Mask next = a(b(z));
      if (next == z) break;
      z = next;
    }
    table[y] = z;
  }
  return ExtensionalOperator(a.universe(), std::move(table));
}

bool verify_monotone_redundancy(const Language& language, Execution exec) {
  const auto n = static_cast<unsigned>(language.size());
  auto census = exec == Execution::Parallel ? kernels::monotone_census_parallel(n)
                                            : kernels::monotone_census_serial(n);
  return census.counterexamples == 0;
}

std::string render_table(const ExtensionalOperator& op) {
  const kernels::SubsetOrder order(op.elements());
  std::ostringstream out;
  for (Mask y : order.masks()) {
    out << to_string(op.set_of(y)) << " -> " << to_string(op.set_of(op(y))) << '\n';
  }
  return out.str();
}

StatementSet project(const TupleSet& x, std::size_t k) {
  StatementSet out;
  for (const auto& t : x) out.insert(t.at(k));
  return out;
}

TupleSet cartesian(std::span<const StatementSet> factors) {
  TupleSet out;
  if (factors.empty()) return out;
  for (const auto& f : factors) {
    if (f.empty()) return out;
  }
  std::vector<StatementSet::const_iterator> pos;
  for (const auto& f : factors) pos.push_back(f.begin());
  for (;;) {
    StatementTuple t;
    t.reserve(factors.size());
    for (const auto& it : pos) t.push_back(*it);
    out.insert(std::move(t));
    std::size_t k = factors.size();
    while (k > 0) {
      --k;
      if (++pos[k] != factors[k].end()) break;
      pos[k] = factors[k].begin();
      if (k == 0) return out;
    }
  }
}

namespace {

void check_arity(std::span<const SourceConditionalOperator> ops, const TupleSet& x) {
  if (ops.empty()) throw std::invalid_argument("product needs at least one factor");
  for (const auto& t : x) {
    if (t.size() != ops.size()) throw std::invalid_argument("tuple arity mismatch");
  }
}

}  // namespace

TupleSet product_apply(std::span<const SourceConditionalOperator> ops, const TupleSet& x) {
  check_arity(ops, x);
  std::vector<StatementSet> factors;
  for (std::size_t k = 0; k < ops.size(); ++k) factors.push_back(conseq::apply(ops[k], project(x, k)));
  return cartesian(factors);
}

TupleSet realize_product(std::span<const SourceConditionalOperator> ops, const TupleSet& x) {
  check_arity(ops, x);
  std::vector<StatementSet> factors;
  for (std::size_t k = 0; k < ops.size(); ++k) factors.push_back(realize(ops[k], project(x, k)));
  return cartesian(factors);
}

ProductExtensionalOperator product_extensional(std::span<const ExtensionalOperator> factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  std::vector<StatementSet> universes;
  for (const auto& f : factors) {
    universes.emplace_back(f.universe().begin(), f.universe().end());
  }
  TupleSet tuples = cartesian(universes);
  if (tuples.size() > kMaxExtensionalElements) {
    throw std::length_error("extensional operators are capped at 12 elements");
  }
  return ProductExtensionalOperator::tabulate(
      std::vector<StatementTuple>(tuples.begin(), tuples.end()), [&](const TupleSet& x) {
        std::vector<StatementSet> images;
        for (std::size_t k = 0; k < factors.size(); ++k) images.push_back(factors[k](project(x, k)));
        return cartesian(images);
      });
}

}  // namespace conseq
