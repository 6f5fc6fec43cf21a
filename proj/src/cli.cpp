#include "lowprob/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lowprob/abstraction.hpp"
#include "lowprob/capacity_file.hpp"
#include "lowprob/errors.hpp"

namespace lowprob::cli {

namespace {

enum class Format { Pretty, Tsv };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

class Printer {
 public:
  Printer(std::ostream& os, Format f) : os_(os), format_(f) {}

  Format format() const { return format_; }

  void meta(const std::string& key, const std::string& value) {
    if (format_ == Format::Tsv)
      os_ << "# " << key << ": " << value << "\n";
    else
      os_ << key << ": " << value << "\n";
  }

  void line(const std::string& text) {
    if (format_ == Format::Pretty) os_ << text << "\n";
  }

  /// Tab-separated regardless of format.
  void tsv(const Table& t) {
    emit_tsv(t.header);
    for (const auto& r : t.rows) emit_tsv(r);
  }

  void table(const Table& t) {
    if (format_ == Format::Tsv) return tsv(t);
    std::vector<std::size_t> width(t.header.size());
    auto widen = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    auto emit = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        s += r[i];
        if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os_ << s << "\n";
    };
    emit(t.header);
    for (const auto& r : t.rows) emit(r);
  }

 private:
  void emit_tsv(const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os_ << (i ? "\t" : "") << r[i];
    os_ << "\n";
  }

  std::ostream& os_;
  Format format_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string render_dist(const Distribution& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.frame().size(); ++i) s += (i ? ", " : "") + p.mass(i).str();
  return s + ">";
}

Table bounds_table(const LowerProbability& low) {
  Table t{{"event", "lower", "upper"}, {}};
  for (const auto& e : all_events(low.frame()))
    t.rows.push_back({render(low.frame(), e), low(e).str(), low.upper(e).str()});
  return t;
}

Table posterior_table(const Frame& frame, const std::function<Interval(const Event&)>& post) {
  Table t{{"event", "lower", "upper"}, {}};
  for (const auto& e : all_events(frame)) {
    const Interval iv = post(e);
    t.rows.push_back({render(frame, e), iv.lo.str(), iv.hi.str()});
  }
  return t;
}

// Coin marginal: low({h}) = low({t}) = l.
LowerProbability coin(const std::string& h, const std::string& t, const Rational& l) {
  SetFunction sf(Frame({h, t}));
  sf.set(Event(1, 2), l);
  sf.set(Event(2, 2), l);
  sf.set(Event(3, 2), Rational(1));
  return LowerProbability::from(std::move(sf));
}

ProductFrame coin_split() { return ProductFrame(Frame({"h1", "t1"}), Frame({"h2", "t2"})); }

LowerProbability coins(ProductKind kind) {
  const Rational q(1, 4);
  return product(kind, coin_split(), coin("h1", "t1", q), coin("h2", "t2", q));
}

LowerProbability from_focal(const Frame& frame, const std::vector<std::pair<std::vector<std::string>, Rational>>& m) {
  SetFunction masses(frame);
  for (const auto& [labels, v] : m) {
    std::uint32_t mask = 0;
    for (const auto& l : labels) mask |= 1U << *frame.index_of(l);
    masses.set(Event(mask, frame.size()), v);
  }
  return LowerProbability::from(inverse_mobius(MobiusMass(std::move(masses))));
}

std::string method_name(bool closed) { return closed ? "closed-form" : "envelope"; }

// ---------------------------------------------------------------------------

struct Options {
  std::string format = "pretty";
  std::string output;
};

int cmd_validate(Printer& pr, const std::string& path) {
  const auto file = load_capacity_file(path);
  const auto report = validate_lower(to_set_function(file));
  pr.meta("valid", yes_no(report.ok()));
  pr.meta("pair_check", report.exhaustive ? "exhaustive" : "sampled");
  if (!report.ok()) {
    pr.meta("violations", std::to_string(report.total_violations));
    Table t{{"kind", "first", "second", "detail"}, {}};
    for (const auto& v : report.violations)
      t.rows.push_back({to_string(v.kind), render(file.frame, v.first), render(file.frame, v.second), v.detail});
    pr.table(t);
    return kInputError;
  }
  return kOk;
}

int cmd_mobius(Printer& pr, const std::string& path, bool focal_only) {
  const auto file = load_capacity_file(path);
  const auto m = mobius(to_set_function(file));
  Table t{{"event", "mass"}, {}};
  for (const auto& e : all_events(file.frame)) {
    if (focal_only && m(e).is_zero()) continue;
    t.rows.push_back({render(file.frame, e), m(e).str()});
  }
  pr.table(t);
  return kOk;
}

int cmd_invert(Printer& pr, const std::string& path) {
  const auto file = load_capacity_file(path);
  if (file.kind != EntryKind::Mobius) throw std::invalid_argument("invert-mobius expects a file of kind mobius");
  const auto sf = to_set_function(file);
  const auto report = validate_lower(sf);
  pr.meta("valid", yes_no(report.ok()));
  pr.table(bounds_table(LowerProbability::unchecked(sf)));
  return kOk;
}

int cmd_classify(Printer& pr, const std::string& path) {
  const auto file = load_capacity_file(path);
  const auto sf = to_set_function(file);
  const auto report = validate_lower(sf);
  pr.meta("lower_probability", yes_no(report.ok()));
  if (!report.ok()) return kInputError;
  const auto low = LowerProbability::unchecked(sf);
  const bool belief = is_belief_function(low);
  pr.meta("belief_function", yes_no(belief));
  if (belief) {
    pr.meta("2-monotone", "yes");
  } else if (low.frame().size() <= kTwoMonotoneFrameCap) {
    const auto r = is_2monotone(low);
    pr.meta("2-monotone", yes_no(r.holds));
    if (r.witness)
      pr.meta("2-monotone_witness",
              render(low.frame(), r.witness->first) + " " + render(low.frame(), r.witness->second));
  } else {
    pr.meta("2-monotone", "undecided");
  }
  pr.meta("coherent", yes_no(coherent_envelope(low) == low));
  return kOk;
}

int cmd_condition(Printer& pr, const std::string& path, const std::string& on, const std::string& query, bool table,
                  const std::string& method) {
  const auto low = to_lower(load_capacity_file(path));
  const Event e = parse_event(low.frame(), on);
  if (low.upper(e).is_zero()) throw UndefinedConditional("upper probability of the conditioning event is 0");
  bool closed = method == "closed-form";
  if (method == "auto") closed = certify_2monotone(low) == true && low(e).sign() > 0;

  pr.meta("method", method_name(closed));
  pr.meta("given", render(low.frame(), e));
  if (table) {
    if (closed) {
      if (certify_2monotone(low) != true)
        throw PreconditionUnmet("closed-form conditioning needs a certified 2-monotone lower probability");
      pr.table(posterior_table(low.frame(), [&](const Event& a) { return condition_closed_form(low, a, e); }));
    } else {
      const auto post = condition_table(low, e);
      pr.table(posterior_table(low.frame(), [&](const Event& a) { return post(a); }));
    }
    return kOk;
  }
  const Event a = parse_event(low.frame(), query);
  const Interval iv = closed ? condition_closed_form(low, a, e) : condition_envelope(low, a, e);
  pr.table({{"event", "lower", "upper"}, {{render(low.frame(), a), iv.lo.str(), iv.hi.str()}}});
  return kOk;
}

int cmd_product(Printer& pr, const std::string& fa, const std::string& fb, int kind) {
  const auto la = to_lower(load_capacity_file(fa));
  const auto lb = to_lower(load_capacity_file(fb));
  const ProductFrame split(la.frame(), lb.frame());
  const ProductKind k = kind == 1 ? ProductKind::Type1 : ProductKind::Type2;
  pr.meta("product", kind == 1 ? "type-1 envelope" : "type-2 (Möbius)");
  pr.table(bounds_table(product(k, split, la, lb)));
  return kOk;
}

int cmd_diagnose(Printer& pr, const std::string& path, const std::string& as, const std::string& bs) {
  const auto low = to_lower(load_capacity_file(path));
  const Frame& f = low.frame();
  const Event a = parse_event(f, as);
  const Event b = parse_event(f, bs);
  if (low.upper(b).is_zero()) throw UndefinedConditional("upper probability of the conditioning event is 0");

  const auto rep = independence_diagnostic(low, a, b);
  const auto weak = check_weak_independence(low, a, b);
  const auto dil = dilation_witness(low, a, b);
  auto iv = [](const Interval& i) { return "[" + i.lo.str() + ", " + i.hi.str() + "]"; };
  auto witness = [&](const std::optional<Distribution>& w) {
    if (w) return render_dist(*w);
    return std::string(dil.complete ? "none (vertex search complete)" : "none found by " + dil.method);
  };

  pr.line("A = " + render(f, a) + ", B = " + render(f, b));
  pr.line("prior " + iv(rep.prior) + ", posterior given B " + iv(rep.posterior));
  pr.line("irrelevance: lower " + yes_no(rep.irrelevance_lower) + ", upper " + yes_no(rep.irrelevance_upper));
  pr.line("factorization: lower " + yes_no(rep.factorization_lower) + ", upper " + yes_no(rep.factorization_upper));
  std::string conds;
  for (std::size_t i = 0; i < 4; ++i) conds += (i ? ", " : "") + yes_no(rep.impossibility_conditions[i]);
  pr.line("impossibility conditions (" + conds + "), all hold: " + yes_no(rep.all_conditions_hold) +
          (rep.two_monotone_certified ? " (2-monotone certified)" : ""));
  pr.line("weak independence: literal " + yes_no(weak.literal) + ", interpreted " + yes_no(weak.interpreted));
  pr.line("lower dilation witness: " + witness(dil.lower_witness));
  pr.line("upper dilation witness: " + witness(dil.upper_witness));
  pr.line("");

  Table t{{"key", "value"}, {}};
  auto kv = [&](const std::string& k, const std::string& v) { t.rows.push_back({k, v}); };
  kv("prior_lower", rep.prior.lo.str());
  kv("prior_upper", rep.prior.hi.str());
  kv("posterior_lower", rep.posterior.lo.str());
  kv("posterior_upper", rep.posterior.hi.str());
  kv("irrelevance_lower", yes_no(rep.irrelevance_lower));
  kv("irrelevance_upper", yes_no(rep.irrelevance_upper));
  kv("factorization_lower", yes_no(rep.factorization_lower));
  kv("factorization_upper", yes_no(rep.factorization_upper));
  for (std::size_t i = 0; i < 4; ++i) kv("condition_" + std::to_string(i + 1), yes_no(rep.impossibility_conditions[i]));
  kv("all_conditions_hold", yes_no(rep.all_conditions_hold));
  kv("two_monotone_certified", yes_no(rep.two_monotone_certified));
  kv("weak_independence_literal", yes_no(weak.literal));
  kv("weak_independence_interpreted", yes_no(weak.interpreted));
  kv("dilation_method", dil.method);
  kv("dilation_search_complete", yes_no(dil.complete));
  kv("lower_dilation_witness", dil.lower_witness ? render_dist(*dil.lower_witness) : "none");
  kv("upper_dilation_witness", dil.upper_witness ? render_dist(*dil.upper_witness) : "none");
  pr.tsv(t);
  return kOk;
}

// Joint labels split at character `k` into marginal labels; the joint
// distribution is reindexed onto the product frame of the marginal files.
Distribution split_joint(const CapacityFile& joint, std::size_t k, const ProductFrame& split) {
  if (joint.kind != EntryKind::Dist) throw std::invalid_argument("abstract expects a joint file of kind dist");
  const Distribution p = to_distribution(joint);
  if (joint.frame.size() != split.joint().size())
    throw std::invalid_argument("joint frame has " + std::to_string(joint.frame.size()) + " outcomes, marginals give " +
                                std::to_string(split.joint().size()));
  std::vector<Rational> mass(split.joint().size());
  std::vector<bool> hit(mass.size(), false);
  for (std::size_t i = 0; i < joint.frame.size(); ++i) {
    const std::string& label = joint.frame.label(i);
    if (k == 0 || k >= label.size())
      throw std::invalid_argument("--split " + std::to_string(k) + " does not split label '" + label + "'");
    const auto l = split.left().index_of(label.substr(0, k));
    const auto r = split.right().index_of(label.substr(k));
    if (!l || !r)
      throw std::invalid_argument("label '" + label + "' is not a left label followed by a right label");
    const std::size_t j = split.index(*l, *r);
    hit[j] = true;
    mass[j] = p.mass(i);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw std::invalid_argument("joint frame does not cover every pair of marginal labels");
  return Distribution(split.joint(), std::move(mass));
}

int cmd_abstract(Printer& pr, const std::string& path, std::size_t k, const std::vector<std::string>& marginals,
                 const std::string& step) {
  const auto joint = load_capacity_file(path);
  const auto la = to_lower(load_capacity_file(marginals.at(0)));
  const auto lb = to_lower(load_capacity_file(marginals.at(1)));
  const ProductFrame split(la.frame(), lb.frame());
  const Distribution pstar = split_joint(joint, k, split);
  const auto cand = build_abstraction(pstar, split, la, lb);
  const auto check = is_abstraction(cand.joint, pstar, split);

  pr.meta("valid", yes_no(cand.valid));
  if (cand.violating_event) pr.meta("violating_event", render(split.joint(), *cand.violating_event));
  pr.meta("mobius_on_rectangles", yes_no(check.factorizes));
  if (!step.empty()) {
    if (!cand.valid) throw PreconditionUnmet("local propriety needs a valid candidate");
    const auto prop = local_propriety_check(cand, split, Rational::parse(step));
    pr.meta("locally_proper", yes_no(prop.locally_proper) + " (single-coordinate raises by " + step + ")");
    if (prop.dominating) {
      const Frame& mf = *prop.raised_side == Side::Left ? split.left() : split.right();
      pr.meta("dominating_raise", std::string(*prop.raised_side == Side::Left ? "left " : "right ") +
                                      render(mf, *prop.raised_event));
    }
  }
  pr.table(bounds_table(cand.joint));
  return kOk;
}

int cmd_example(Printer& pr, const std::string& name) {
  if (name == "coins-type1") {
    pr.meta("example", "two coins, type-1 product of low({h}) = low({t}) = 1/4");
    pr.table(bounds_table(coins(ProductKind::Type1)));
  } else if (name == "coins-type2") {
    pr.meta("example", "two coins, type-2 product of low({h}) = low({t}) = 1/4");
    pr.table(bounds_table(coins(ProductKind::Type2)));
  } else if (name == "coins-condition") {
    const auto low = coins(ProductKind::Type1);
    const Event e = low.frame().event_of({"h1h2", "h1t2"});
    pr.meta("example", "type-1 coins conditioned on " + render(low.frame(), e));
    pr.meta("method", "envelope");
    const auto post = condition_table(low, e);
    pr.table(posterior_table(low.frame(), [&](const Event& a) { return post(a); }));
  } else if (name == "monty-hall") {
    const Frame f({"123", "132", "124", "142", "134", "143", "234", "243", "324", "342", "423", "432"});
    const Rational a(1, 12), b(1, 4);
    const auto low = from_focal(f, {{{"123", "132"}, a},
                                    {{"124", "142"}, a},
                                    {{"134", "143"}, a},
                                    {{"234", "243"}, b},
                                    {{"324", "342"}, b},
                                    {{"423", "432"}, b}});
    const Event e = f.event_of({"143", "243"});
    pr.meta("example", "four-curtain Monty Hall, vacuous curtain order");
    pr.meta("given", render(f, e));
    Table t{{"event", "query", "method", "lower", "upper"}, {}};
    for (const auto& [label, q] : {std::pair{"stay", f.event_of({"134", "143"})},
                                   std::pair{"switch", f.event_of({"234", "243"})}}) {
      for (const bool closed : {true, false}) {
        const Interval iv = closed ? condition_closed_form(low, q, e) : condition_envelope(low, q, e);
        t.rows.push_back({render(f, q), label, method_name(closed), iv.lo.str(), iv.hi.str()});
      }
    }
    pr.table(t);
  } else if (name == "monty-hall-reduced") {
    // Outcome "ij": prize behind i, curtain j left closed.
    const Frame f({"12", "13", "14", "22", "33", "44"});
    const Rational a(1, 12), b(1, 4);
    const auto low = LowerProbability::of(Distribution(f, {a, a, a, b, b, b}));
    const Event e = f.event_of({"12", "22"});
    pr.meta("example", "reduced Monty Hall, prize location and unrevealed curtain");
    pr.meta("given", render(f, e));
    Table t{{"event", "query", "method", "lower", "upper"}, {}};
    for (const auto& [label, q] : {std::pair{"stay", f.event_of({"12", "13", "14"})},
                                   std::pair{"switch", f.event_of({"22", "33", "44"})}}) {
      const Interval iv = condition_envelope(low, q, e);
      t.rows.push_back({render(f, q), label, "envelope", iv.lo.str(), iv.hi.str()});
    }
    pr.table(t);
  } else if (name == "figure3") {
    const ProductFrame split = coin_split();
    const Rational q(1, 4);
    const auto la = coin("h1", "t1", q);
    const auto lb = coin("h2", "t2", q);
    auto d = [&](long w, long x, long y, long z) {
      return Distribution(split.joint(), {Rational(w, 16), Rational(x, 16), Rational(y, 16), Rational(z, 16)});
    };
    pr.meta("example", "membership in the type-1 product set");
    Table t{{"distribution", "in_set"}, {}};
    for (const auto& p : {d(1, 3, 3, 9), d(9, 3, 3, 1), d(5, 3, 3, 5)})
      t.rows.push_back({render_dist(p), yes_no(in_type1_set(p, split, la, lb))});
    pr.table(t);
  } else {
    throw std::invalid_argument("unknown example '" + name + "'");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lower-probability toolkit", "lowprob"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "pretty or tsv")->check(CLI::IsMember({"pretty", "tsv"}));
  app.add_option("--output", opt.output, "write results to FILE");

  std::string file, file_b, on, query, method = "auto", name, step;
  std::vector<std::string> marginals;
  bool table = false, focal_only = false;
  int kind = 2;
  std::size_t split_at = 0;

  auto* validate = app.add_subcommand("validate", "check the lower-probability axioms");
  validate->add_option("file", file)->required();
  auto* mob = app.add_subcommand("mobius", "Möbius transform");
  mob->add_option("file", file)->required();
  mob->add_flag("--focal", focal_only, "only events with non-zero mass");
  auto* inv = app.add_subcommand("invert-mobius", "lower probability from Möbius masses");
  inv->add_option("file", file)->required();
  auto* classify = app.add_subcommand("classify", "belief function / 2-monotone status");
  classify->add_option("file", file)->required();

  auto* cond = app.add_subcommand("condition", "conditional lower and upper probabilities");
  cond->add_option("file", file)->required();
  cond->add_option("--on", on, "conditioning event")->required();
  auto* q = cond->add_option("--query", query, "queried event");
  auto* tb = cond->add_flag("--table", table, "all events");
  q->excludes(tb);
  cond->add_option("--method", method)->check(CLI::IsMember({"auto", "envelope", "closed-form"}));

  auto* prod = app.add_subcommand("product", "independent product of two marginals");
  prod->add_option("file_a", file)->required();
  prod->add_option("file_b", file_b)->required();
  prod->add_option("--kind", kind, "1: type-1 envelope, 2: type-2 Möbius product")->check(CLI::IsMember({1, 2}));

  auto* diag = app.add_subcommand("diagnose", "irrelevance, factorization and dilation diagnostics");
  diag->add_option("file", file)->required();
  diag->add_option("--a", on)->required();
  diag->add_option("--b", query)->required();

  auto* abs = app.add_subcommand("abstract", "factorizable abstraction of a joint distribution");
  abs->add_option("file", file)->required();
  abs->add_option("--split", split_at, "length of the left label prefix")->required();
  abs->add_option("--marginals", marginals)->required()->expected(2);
  abs->add_option("--check-propriety", step, "raise step for the local propriety test");

  auto* ex = app.add_subcommand("example", "built-in worked examples");
  ex->add_option("name", name)
      ->required()
      ->check(CLI::IsMember(
          {"coins-type1", "coins-condition", "coins-type2", "monty-hall", "monty-hall-reduced", "figure3"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::ostringstream buffer;
  Printer pr(buffer, opt.format == "tsv" ? Format::Tsv : Format::Pretty);
  int code = kOk;
  try {
    if (*validate) code = cmd_validate(pr, file);
    else if (*mob) code = cmd_mobius(pr, file, focal_only);
    else if (*inv) code = cmd_invert(pr, file);
    else if (*classify) code = cmd_classify(pr, file);
    else if (*cond) {
      if (!table && query.empty()) throw std::invalid_argument("condition needs --query or --table");
      code = cmd_condition(pr, file, on, query, table, method);
    } else if (*prod) code = cmd_product(pr, file, file_b, kind);
    else if (*diag) code = cmd_diagnose(pr, file, on, query);
    else if (*abs) code = cmd_abstract(pr, file, split_at, marginals, step);
    else if (*ex) code = cmd_example(pr, name);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UndefinedConditional& e) {
    err << "undefined conditional: " << e.what() << "\n";
    return kUndefinedConditional;
  } catch (const PreconditionUnmet& e) {
    err << "precondition unmet: " << e.what() << "\n";
    return kPreconditionUnmet;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (opt.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(opt.output);
    if (!f) {
      err << "error: cannot write '" << opt.output << "'\n";
      return kInputError;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace lowprob::cli
