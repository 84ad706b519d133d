#include "puiseux/cli.hpp"

#include "puiseux/classify.hpp"
#include "puiseux/closure.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/model.hpp"
#include "puiseux/numsg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace puiseux::cli {
namespace {

using json = nlohmann::ordered_json;
using exact::BigInt;
using exact::Rat;
using model::MonoidExpr;
using model::Tri;

json big(const BigInt& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(n);
  return n.str();
}

json rat_list(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(q.str());
  return out;
}

std::string tri(Tri t) { return std::string(model::tri_name(t)); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string counts_str(const std::vector<std::uint64_t>& c) {
  std::vector<std::string> parts;
  for (auto v : c) parts.push_back(std::to_string(v));
  return "(" + join(parts, ", ") + ")";
}

std::string witness_str(const std::vector<factor::Term>& w) {
  if (w.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : w) {
    parts.push_back(t.count == 1 ? t.element.str()
                                 : std::to_string(t.count) + "*(" + t.element.str() + ")");
  }
  return join(parts, " + ");
}

json verdict_json(const model::Verdict& v) {
  return {{"holds", tri(v.holds)}, {"certificate", v.certificate}};
}

// Result of one subcommand: text lines and the JSON document.
struct Output {
  std::string text;
  json doc;
};

struct Context {
  CliConfig cfg;

  MonoidExpr expr(const std::string& s) const { return model::parse(s); }
  Rat rat(const std::string& s) const { return Rat::parse(s); }

  numsg::NumericalMonoid numerical(const MonoidExpr& m, const char* command) const {
    auto gens = model::finite_generators(m);
    if (!gens) {
      throw Error(ErrorCode::Unsupported,
                  std::string(command) + " needs a finitely generated monoid; got " + model::print(m));
    }
    return numsg::normalize(std::span<const Rat>(*gens));
  }
};

Output cmd_parse(const Context& c, const std::string& text) {
  const MonoidExpr m = c.expr(text);
  const auto meta = model::meta(m);
  json doc = {{"input", text},
              {"canonical", model::print(m)},
              {"meta",
               {{"zero_limit_point", meta.zero_limit_point},
                {"increasing", meta.increasing},
                {"strongly_increasing", meta.strongly_increasing},
                {"finitely_generated", meta.finitely_generated},
                {"nonempty_conductor", tri(meta.nonempty_conductor)},
                {"conductor_reason", meta.conductor_reason}}}};
  return {model::print(m) + "\n", doc};
}

std::vector<Rat> atom_listing(const factor::AtomsDesc& a, const CliConfig& cfg) {
  std::vector<Rat> out;
  const auto primes = exact::primes_upto(cfg.max_prime);
  if (const auto* f = std::get_if<factor::FiniteList>(&a)) return f->atoms;
  if (const auto* p = std::get_if<factor::PowersOf>(&a)) {
    for (unsigned j = 0; j <= cfg.depth; ++j) out.push_back(p->factor * exact::pow(p->base, j));
    std::sort(out.begin(), out.end());
  } else if (const auto* r = std::get_if<factor::ReciprocalPrimes>(&a)) {
    for (auto p : primes) out.push_back(r->factor * Rat::make(1, p));
    std::sort(out.begin(), out.end());
  } else if (const auto* r = std::get_if<factor::PrimeFracs>(&a)) {
    for (auto p : primes) out.push_back(r->factor * Rat::make(p - 1, p));
  } else if (const auto* r = std::get_if<factor::IncreasingDenomAtoms>(&a)) {
    for (auto p : primes) {
      if (p == 2) continue;
      const bool even = exact::prime_index(p) % 2 == 0;
      out.push_back(r->factor * (even ? Rat::make(BigInt(p) * p + 1, p) : Rat::make(p + 1, p)));
    }
  }
  return out;
}

Output cmd_atoms(const Context& c, const std::string& text) {
  const MonoidExpr m = c.expr(text);
  const auto a = factor::atoms(m);
  static const char* kinds[] = {"finite_list", "powers_of", "interval", "reciprocal_primes",
                                "prime_fracs", "increasing_denom_atoms", "empty", "unknown"};
  json doc = {{"monoid", model::print(m)}, {"kind", kinds[a.index()]}, {"description", factor::describe(a)}};
  if (const auto* p = std::get_if<factor::PowersOf>(&a)) {
    doc["factor"] = p->factor.str();
    doc["base"] = p->base.str();
  } else if (const auto* i = std::get_if<factor::IntervalRats>(&a)) {
    doc["lo"] = i->lo.str();
    doc["hi"] = i->hi.str();
  }
  const auto listing = atom_listing(a, c.cfg);
  const bool partial = !std::holds_alternative<factor::FiniteList>(a) &&
                       !std::holds_alternative<factor::EmptySet>(a) &&
                       !std::holds_alternative<factor::UnknownAtoms>(a) &&
                       !std::holds_alternative<factor::IntervalRats>(a);
  if (partial || std::holds_alternative<factor::FiniteList>(a)) doc["listing"] = rat_list(listing);

  std::string text_out = factor::describe(a) + "\n";
  if (partial) {
    std::vector<std::string> parts;
    for (const auto& q : listing) parts.push_back(q.str());
    text_out += "first atoms: " + join(parts, ", ") + "\n";
  }
  return {text_out, doc};
}

Output cmd_member(const Context& c, const std::string& text, const std::string& x_text) {
  const MonoidExpr m = c.expr(text);
  const Rat x = c.rat(x_text);
  const auto r = factor::member_bounded(m, x, c.cfg.depth);
  json w = json::array();
  for (const auto& t : r.witness) w.push_back({{"element", t.element.str()}, {"count", t.count}});
  json doc = {{"monoid", model::print(m)}, {"x", x.str()}, {"holds", tri(r.holds)},
              {"witness", w}, {"reason", r.reason}};
  std::string out = tri(r.holds) + "\n";
  if (r.holds == Tri::Yes) out += x.str() + " = " + witness_str(r.witness) + "\n";
  return {out, doc};
}

struct FactorizationTable {
  std::vector<Rat> atoms;
  std::vector<std::vector<std::uint64_t>> rows;
  bool complete = true;
};

FactorizationTable factor_table(const Context& c, const MonoidExpr& m, const Rat& x) {
  FactorizationTable t;
  if (auto gens = model::finite_generators(m)) {
    auto n = numsg::normalize(std::span<const Rat>(*gens));
    for (auto g : n.gens()) t.atoms.push_back(n.to_original(g));
    if (auto v = n.to_internal(x)) {
      for (auto& z : numsg::factorizations(n, *v)) t.rows.push_back(std::move(z.counts));
    }
    return t;
  }
  auto [factor, core] = model::strip_scale(m);
  const auto* s = core.as<model::CyclicSemiring>();
  if (s == nullptr) {
    throw Error(ErrorCode::Unsupported,
                "factorize supports finitely generated monoids and S(r); got " + model::print(m));
  }
  const Rat y = x / factor;
  unsigned depth = c.cfg.depth;
  if (s->base > Rat(1)) {
    // Powers above x cannot occur, so this window is complete.
    depth = 0;
    for (Rat v = s->base; v <= y; v = v * s->base) ++depth;
  } else {
    t.complete = false;
  }
  auto w = factor::zs_bounded(s->base, y, depth);
  for (const auto& a : w.atoms) t.atoms.push_back(a * factor);
  t.rows = std::move(w.solutions);
  return t;
}

Output cmd_factorize(const Context& c, const std::string& text, const std::string& x_text) {
  const MonoidExpr m = c.expr(text);
  const Rat x = c.rat(x_text);
  auto t = factor_table(c, m, x);
  json rows = json::array();
  std::string out = "atoms: " + [&] {
    std::vector<std::string> p;
    for (const auto& a : t.atoms) p.push_back(a.str());
    return join(p, ", ");
  }() + "\n";
  for (const auto& r : t.rows) {
    rows.push_back(r);
    out += counts_str(r) + "\n";
  }
  if (!t.complete) out += "(window r^0..r^" + std::to_string(t.atoms.size() - 1) + "; deeper factorizations may exist)\n";
  json doc = {{"monoid", model::print(m)}, {"x", x.str()}, {"atoms", rat_list(t.atoms)},
              {"factorizations", rows}, {"complete", t.complete}};
  return {out, doc};
}

Output cmd_lengths(const Context& c, const std::string& text, const std::string& x_text) {
  const MonoidExpr m = c.expr(text);
  const Rat x = c.rat(x_text);
  auto t = factor_table(c, m, x);
  if (!t.complete) {
    throw Error(ErrorCode::Unsupported, "lengths need a complete factorization set; S(r) with r < 1 only has windows");
  }
  std::vector<std::uint64_t> lens;
  for (const auto& r : t.rows) {
    std::uint64_t l = 0;
    for (auto v : r) l += v;
    lens.push_back(l);
  }
  std::sort(lens.begin(), lens.end());
  lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
  std::vector<std::string> parts;
  for (auto l : lens) parts.push_back(std::to_string(l));
  return {"[" + join(parts, ", ") + "]\n", {{"monoid", model::print(m)}, {"x", x.str()}, {"lengths", lens}}};
}

Output cmd_closure(const Context& c, const std::string& text) {
  const MonoidExpr m = c.expr(text);
  const auto d = closure::root_closure(m);
  const auto rc = closure::is_root_closed(m);
  const auto am = closure::is_antimatter_closure(m);
  json doc = {{"monoid", model::print(m)},
              {"n", big(d.n)},
              {"s", d.s.str()},
              {"root_closed", verdict_json(rc)},
              {"antimatter_closure", verdict_json(am)}};
  std::string out = "root closure: " + d.n.str() + " * <1/d | d divides " + d.s.str() + ">\n" +
                    "root-closed: " + tri(rc.holds) + "\n" + "closure antimatter: " + tri(am.holds) + "\n";
  return {out, doc};
}

Output cmd_conductor(const Context& c, const std::string& text) {
  const MonoidExpr m = c.expr(text);
  const auto d = closure::conductor(m, c.cfg.seed);
  json doc = {{"kind", std::string(closure::kind_name(d.kind))}};
  if (d.sigma) doc["sigma"] = d.sigma->str();
  doc["reason"] = d.reason;
  std::string out(closure::kind_name(d.kind));
  if (d.sigma) out += " " + d.sigma->str();
  return {out + "\n", doc};
}

json verdicts_json(const std::vector<classify::PropertyVerdict>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    arr.push_back({{"property", std::string(classify::property_name(v.property))},
                   {"holds", tri(v.holds)},
                   {"certificate", v.certificate}});
  }
  return arr;
}

Output cmd_classify(const Context& c, const std::string& text) {
  const MonoidExpr m = c.expr(text);
  const auto vs = classify::classify(m);
  std::string out;
  for (const auto& v : vs) {
    std::string name(classify::property_name(v.property));
    name.resize(18, ' ');
    std::string holds = tri(v.holds);
    holds.resize(8, ' ');
    out += name + holds + v.certificate + "\n";
  }
  return {out, verdicts_json(vs)};
}

Output cmd_witness_chain(const Context&) {
  json arr = json::array();
  std::string out;
  for (const auto& r : classify::witness_chain()) {
    const std::string hn(classify::property_name(r.holds));
    const std::string fn(classify::property_name(r.fails));
    arr.push_back({{"monoid", model::print(r.monoid)},
                   {"holds", {{"property", hn}, {"holds", tri(r.holds_verdict.holds)}, {"certificate", r.holds_verdict.certificate}}},
                   {"fails", {{"property", fn}, {"holds", tri(r.fails_verdict.holds)}, {"certificate", r.fails_verdict.certificate}}},
                   {"verified", r.verified()}});
    out += model::print(r.monoid) + ": " + hn + " and not " + fn + " [" +
           std::string(r.holds_verdict.rule()) + ", " + std::string(r.fails_verdict.rule()) + "] " +
           (r.verified() ? "verified" : "NOT VERIFIED") + "\n";
  }
  return {out, arr};
}

Output cmd_frobenius(const Context& c, const std::string& text) {
  const MonoidExpr m = c.expr(text);
  const auto n = c.numerical(m, "frobenius");
  const auto f = numsg::frobenius(n);
  json gens = n.gens();
  json doc = {{"monoid", model::print(m)}, {"normalized", gens}, {"scale", n.scale().str()}};
  doc["frobenius"] = f ? json(n.to_original(*f).str()) : json(nullptr);
  return {(f ? n.to_original(*f).str() : std::string("none")) + "\n", doc};
}

Output cmd_apery(const Context& c, const std::string& text, const std::string& x_text) {
  const MonoidExpr m = c.expr(text);
  const Rat x = c.rat(x_text);
  const auto n = c.numerical(m, "apery");
  const auto v = n.to_internal(x);
  if (!v) throw Error(ErrorCode::NotAMember, x.str() + " is not an element of " + model::print(m));
  std::vector<Rat> set;
  for (auto a : numsg::apery(n, *v)) set.push_back(n.to_original(a));
  std::vector<std::string> parts;
  for (const auto& q : set) parts.push_back(q.str());
  return {"[" + join(parts, ", ") + "]\n",
          {{"monoid", model::print(m)}, {"n", x.str()}, {"apery", rat_list(set)}}};
}

Output cmd_iso(const Context& c, const std::string& a_text, const std::string& b_text) {
  const MonoidExpr a = c.expr(a_text);
  const MonoidExpr b = c.expr(b_text);
  const auto r = closure::iso_check(a, b);
  json doc = {{"a", model::print(a)}, {"b", model::print(b)}, {"holds", tri(r.holds)}};
  if (r.multiplier) doc["multiplier"] = r.multiplier->str();
  doc["reason"] = r.reason;
  std::string out = tri(r.holds);
  if (r.multiplier) out += " " + r.multiplier->str();
  return {out + "\n", doc};
}

Output cmd_decompose(const Context& c, const std::string& x_text) {
  const Rat x = c.rat(x_text);
  const auto d = factor::pr_decompose(x);
  json coeffs = json::object();
  std::vector<std::string> parts{d.integer_part.str()};
  BigInt s = 0;
  for (auto [p, a] : d.coeffs) {
    coeffs[std::to_string(p)] = a;
    parts.push_back(std::to_string(a) + "/" + std::to_string(p));
    s += a;
  }
  json doc = {{"x", x.str()}, {"n", big(d.integer_part)}, {"coeffs", coeffs}, {"s", big(s)}};
  return {x.str() + " = " + join(parts, " + ") + "\n", doc};
}

int fail(std::ostream& err, std::string_view code, const std::string& message, int status) {
  err << "error[" << code << "] " << message << "\n";
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  if (const char* env = std::getenv("PUISEUX_FORMAT")) {
    const std::string f(env);
    if (f == "json") ctx.cfg.format = Format::Json;
    else if (f == "text") ctx.cfg.format = Format::Text;
    else return fail(err, "E_USAGE", "PUISEUX_FORMAT must be 'text' or 'json'", kUsageError);
  }

  CLI::App app{"Exact computations with Puiseux monoids", "puiseux"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_flag;
  app.add_option("--depth", ctx.cfg.depth, "atom window / search depth")->check(CLI::PositiveNumber);
  app.add_option("--max-prime", ctx.cfg.max_prime, "largest prime listed for prime-indexed families")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000}));
  app.add_option("--format", format_flag, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", ctx.cfg.seed, "seed for sampled checks");

  std::vector<std::string> pos(2);
  std::function<Output()> action;
  auto sub = [&](const char* name, const char* help, std::vector<const char*> params,
                 std::function<Output()> fn) {
    auto* s = app.add_subcommand(name, help);
    for (std::size_t i = 0; i < params.size(); ++i) s->add_option(params[i], pos[i])->required();
    s->callback([&action, fn] { action = fn; });
  };
  sub("parse", "print the canonical form", {"expr"}, [&] { return cmd_parse(ctx, pos[0]); });
  sub("atoms", "describe the atoms", {"expr"}, [&] { return cmd_atoms(ctx, pos[0]); });
  sub("member", "decide membership (yes/no/unknown)", {"expr", "x"},
      [&] { return cmd_member(ctx, pos[0], pos[1]); });
  sub("factorize", "list factorizations", {"expr", "x"}, [&] { return cmd_factorize(ctx, pos[0], pos[1]); });
  sub("lengths", "list factorization lengths", {"expr", "x"}, [&] { return cmd_lengths(ctx, pos[0], pos[1]); });
  sub("closure", "root closure", {"expr"}, [&] { return cmd_closure(ctx, pos[0]); });
  sub("conductor", "conductor", {"expr"}, [&] { return cmd_conductor(ctx, pos[0]); });
  sub("classify", "property verdicts with certificates", {"expr"}, [&] { return cmd_classify(ctx, pos[0]); });
  sub("witness-chain", "monoids separating the factorization properties", {},
      [&] { return cmd_witness_chain(ctx); });
  sub("frobenius", "Frobenius number", {"expr"}, [&] { return cmd_frobenius(ctx, pos[0]); });
  sub("apery", "Apery set with respect to an element", {"expr", "n"},
      [&] { return cmd_apery(ctx, pos[0], pos[1]); });
  sub("iso", "isomorphism by rescaling", {"a", "b"}, [&] { return cmd_iso(ctx, pos[0], pos[1]); });
  sub("decompose", "canonical form in <1/p | p prime>", {"x"}, [&] { return cmd_decompose(ctx, pos[0]); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, "E_USAGE", e.what(), kUsageError);
  }
  if (format_flag == "json") ctx.cfg.format = Format::Json;
  if (format_flag == "text") ctx.cfg.format = Format::Text;

  try {
    Output o = action();
    if (ctx.cfg.format == Format::Json) {
      out << o.doc.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return kOk;
  } catch (const ParseError& e) {
    std::string message = e.what();
    const std::string pos = std::to_string(e.position());
    if (message.find(" at " + pos) == std::string::npos) message += " (at " + pos + ")";
    return fail(err, error_code_name(e.code()), message, kUsageError);
  } catch (const Error& e) {
    return fail(err, error_code_name(e.code()), e.what(), kDomainError);
  }
}

}  // namespace puiseux::cli
