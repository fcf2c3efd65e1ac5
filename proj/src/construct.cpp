#include "fpg/construct.hpp"

#include <algorithm>

#include "fpg/abelian.hpp"
#include "fpg/coset.hpp"

namespace fpg {

  bool GadgetReport::audit_passed() const {
    return std::none_of(audit.begin(), audit.end(), [](AuditEntry const& e) {
      return e.outcome.is_no();
    });
  }

  Presentation const* GadgetReport::stage(std::string_view name) const {
    for (auto const& [n, p] : stages) {
      if (n == name) {
        return &p;
      }
    }
    return nullptr;
  }

  namespace {

    Word gen(std::size_t i) {
      return Word::generator(static_cast<generator_index>(i));
    }

    // Grows a generator list, renaming new generators away from clashes.
    struct Builder {
      std::vector<std::string> gens;
      std::vector<Word>        rels;

      explicit Builder(Presentation const& p)
          : gens(p.generators().begin(), p.generators().end()),
            rels(p.relators().begin(), p.relators().end()) {}

      std::size_t add(std::string_view stem) {
        gens.push_back(fresh_name(Presentation(gens), stem));
        return gens.size() - 1;
      }

      Presentation build() const {
        return Presentation(gens, rels);
      }
    };

    struct Letters {
      std::size_t a, alpha, b, beta;
    };

    Letters add_letters(Builder& out) {
      Letters l{};
      l.a     = out.add("a");
      l.alpha = out.add("alpha");
      l.b     = out.add("b");
      l.beta  = out.add("beta");
      return l;
    }

    // Relations (i), (ii), (iii) over xs, in that order.
    void push_base_relators(Builder&                        out,
                            std::vector<std::size_t> const& xs,
                            Letters const&                  l,
                            bool                            addendum) {
      Word const a = gen(l.a), al = gen(l.alpha), b = gen(l.b),
                 be = gen(l.beta);
      out.rels.push_back(a * al * invert(a) * power(b, -2));
      out.rels.push_back(al * a * invert(al) * b * invert(be) * invert(b));
      std::size_t const m = xs.size() + (addendum ? 1 : 0);
      for (std::size_t i = 1; i <= m; ++i) {
        auto const k = static_cast<long>(i);
        Word const x = i <= xs.size() ? gen(xs[i - 1]) : Word{};
        out.rels.push_back(power(a, 2 * k) * x * power(al, 2 * k)
                           * power(be, 2 * k + 2) * invert(b)
                           * power(be, -2 * k - 2));
      }
    }

    // Right-hand sides of (iv) and (v).
    Word rhs_iv(Letters const& l) {
      return power(gen(l.beta), 2) * gen(l.b) * power(gen(l.beta), -2);
    }
    Word rhs_v(Letters const& l) {
      Word const b = gen(l.b), be = gen(l.beta);
      return be * b * be * invert(b) * invert(be);
    }

    Word commutator_product(std::vector<std::size_t> const& xs,
                            std::size_t                     y) {
      Word out;
      for (auto x : xs) {
        out = out * commutator(gen(x), gen(y));
      }
      return out;
    }

    std::vector<std::size_t> indices(std::size_t n) {
      std::vector<std::size_t> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = i;
      }
      return out;
    }

    std::vector<std::pair<std::string, Word>>
    identity_map(Presentation const& g, std::size_t offset = 0) {
      std::vector<std::pair<std::string, Word>> out;
      for (std::size_t i = 0; i < g.generator_count(); ++i) {
        out.emplace_back(g.generators()[i], gen(offset + i));
      }
      return out;
    }

    AuditEntry exact(std::string name, bool ok, std::string const& detail) {
      return {std::move(name),
              ok ? CheckOutcome::yes(detail) : CheckOutcome::no(detail)};
    }

    AuditEntry audit_h1_z(Presentation const& p) {
      auto const inv = h1(p);
      return exact("H1 infinite cyclic", inv.is_infinite_cyclic(),
                   "H1 = " + to_string(inv));
    }

    AuditEntry audit_perfect(Presentation const& p) {
      auto const inv = h1(p);
      return exact("H1 trivial", inv.is_trivial(), "H1 = " + to_string(inv));
    }

    AuditEntry skipped(std::string name) {
      return {std::move(name), CheckOutcome::unknown("not run")};
    }

  }  // namespace

  Presentation binary_icosahedral() {
    Word const c = gen(0), d = gen(1);
    return Presentation({"c", "d"},
                        {power(c, 2) * power(d, -3),
                         power(c, 2) * invert(power(c * invert(d), 5))});
  }

  Presentation alternating_a5() {
    Word const c = gen(0), d = gen(1);
    return Presentation({"c", "d"}, {power(c, 2), power(d, 3), power(c * d, 5)});
  }

  ////////////////////////////////////////////////////////////////////////

  GadgetReport perfect_embed(Presentation const& g,
                             bool                addendum,
                             AuditOptions const& options) {
    (void) options;
    Builder     out(g);
    auto const  xs = indices(g.generator_count());
    auto const  l  = add_letters(out);
    push_base_relators(out, xs, l, addendum);
    out.rels.push_back(commutator_product(xs, l.a) * invert(rhs_iv(l)));
    out.rels.push_back(commutator_product(xs, l.alpha) * invert(rhs_v(l)));

    GadgetReport r;
    r.output        = out.build();
    r.provenance    = addendum ? "perfect_embed(addendum)" : "perfect_embed";
    r.generator_map = identity_map(g);
    r.audit.push_back(audit_perfect(r.output));
    return r;
  }

  GadgetReport k3_embed(Presentation const& g, AuditOptions const& options) {
    GadgetReport const pe = perfect_embed(g, false, options);
    Presentation const& p = pe.output;
    std::size_t const   k = p.generator_count();

    Builder     out(direct_product(p, p, "_l", "_r"));
    std::size_t s = out.add("s");
    std::size_t t = out.add("t");
    std::size_t u = out.add("u");
    for (std::size_t i = 0; i < k; ++i) {
      Word const pl = gen(i), pr = gen(k + i);
      out.rels.push_back(invert(gen(s)) * pr * gen(s) * invert(pl));
    }
    for (std::size_t i = 0; i < k; ++i) {
      Word const pl = gen(i), pr = gen(k + i);
      out.rels.push_back(invert(gen(t)) * pr * gen(t) * invert(pl * pr));
    }
    out.rels.push_back(invert(gen(u)) * gen(s) * gen(u) * power(gen(s), -2));
    out.rels.push_back(invert(gen(u)) * gen(t) * gen(u) * power(gen(t), -2));

    GadgetReport r;
    r.output        = out.build();
    r.provenance    = "k3_embed";
    r.generator_map = identity_map(g);
    r.stages.emplace_back("P", p);
    r.audit.push_back(audit_h1_z(r.output));
    if (options.semidecide) {
      r.audit.push_back({"normally generated by u",
                         weight_one_witness_check(r.output, gen(u),
                                                  options.max_cosets)});
    } else {
      r.audit.push_back(skipped("normally generated by u"));
    }
    return r;
  }

  GadgetReport k3_minus_k2(Presentation const& g, AuditOptions const& options) {
    GadgetReport const pe = perfect_embed(g, true, options);
    Presentation const& p = pe.output;
    std::size_t const   k = p.generator_count();
    std::size_t const   m = g.generator_count();

    // Q = <P x P, s : s^-1 (1,p) s = (p,1)>
    Presentation const pp = direct_product(p, p, "_l", "_r");
    std::vector<std::pair<Word, Word>> pairs;
    for (std::size_t i = 0; i < k; ++i) {
      pairs.emplace_back(gen(k + i), gen(i));
    }
    Presentation const q = hnn_extension(pp, fresh_name(pp, "s"), pairs);
    std::size_t const  n = q.generator_count();  // 2k + 1
    std::size_t const  s = 2 * k;

    // q = (a, alpha): a from the left copy, alpha from the right copy.
    Word const qword = gen(m) * gen(k + m + 1);

    Builder out(free_product(q, q, "1", "2"));
    out.rels.push_back(gen(s) * invert(shift(qword, static_cast<generator_index>(n))));
    out.rels.push_back(qword * invert(gen(n + s)));
    std::size_t const t = out.add("t");
    for (std::size_t c = 0; c < 2; ++c) {
      std::size_t const off = c * n;
      for (std::size_t i = 0; i < k; ++i) {
        Word const pl = gen(off + i), pr = gen(off + k + i);
        out.rels.push_back(invert(gen(t)) * pr * gen(t) * invert(pl * pr));
      }
    }

    GadgetReport r;
    r.output        = out.build();
    r.provenance    = "k3_minus_k2";
    r.generator_map = identity_map(g);
    r.stages.emplace_back("P", p);
    r.stages.emplace_back("Q", q);
    r.audit.push_back(audit_h1_z(r.output));
    if (options.semidecide) {
      r.audit.push_back({"normally generated by t",
                         weight_one_witness_check(r.output, gen(t),
                                                  options.max_cosets)});
    } else {
      r.audit.push_back(skipped("normally generated by t"));
    }
    return r;
  }

  GadgetReport s_minus_k3(Presentation const& g, AuditOptions const& options) {
    std::size_t const m = g.generator_count();
    Builder           qt(Presentation(
        std::vector<std::string>(g.generators().begin(), g.generators().end())));
    auto const        xs = indices(m);
    auto const        l  = add_letters(qt);
    std::size_t const c  = qt.add("c");
    std::size_t const d  = qt.add("d");
    std::size_t const e  = qt.add("e");
    push_base_relators(qt, xs, l, false);
    qt.rels.push_back(commutator_product(xs, l.a) * invert(rhs_iv(l)));
    qt.rels.push_back(commutator_product(xs, l.alpha) * invert(rhs_v(l)));
    Word const c2 = power(gen(c), 2);
    qt.rels.push_back(c2 * power(gen(d), -3));
    qt.rels.push_back(c2 * invert(power(gen(c) * invert(gen(d)), 5)));
    qt.rels.push_back(gen(l.b) * invert(gen(d) * gen(e)));
    std::vector<Word> central(g.relators().begin(), g.relators().end());
    central.push_back(c2);
    central.push_back(power(gen(e), 2));
    for (auto const& rw : central) {
      for (std::size_t i = 0; i < qt.gens.size(); ++i) {
        qt.rels.push_back(commutator(rw, gen(i)));
      }
    }
    Presentation const q_tilde = qt.build();
    Presentation const rr      = quotient(q_tilde, {c2});
    Presentation const z({fresh_name(rr, "tau")});
    Presentation const k = direct_product(z, rr);

    GadgetReport r;
    r.output        = k;
    r.provenance    = "s_minus_k3";
    r.generator_map = identity_map(g, 1);
    r.stages.emplace_back("Q~", q_tilde);
    r.stages.emplace_back("R", rr);
    r.audit.push_back(audit_h1_z(r.output));
    if (options.semidecide) {
      // tau is generator 0 of the output, c follows the R generators
      Word const tc = gen(0) * gen(1 + c);
      r.audit.push_back({"normally generated by tau c",
                         weight_one_witness_check(k, tc, options.max_cosets)});
      Presentation const a5t = binary_icosahedral();
      Word const         cc  = gen(0), dd = gen(1);
      Word const         rhs
          = commutator(cc, power(dd * cc * invert(dd) * cc, 2) * dd);
      r.audit.push_back(
          {"c^2 = [c,(d c d^-1 c)^2 d] in the binary icosahedral group",
           word_is_trivial_in_finite(a5t, power(cc, 2) * invert(rhs),
                                     options.max_cosets)});
    } else {
      r.audit.push_back(skipped("normally generated by tau c"));
      r.audit.push_back(
          skipped("c^2 = [c,(d c d^-1 c)^2 d] in the binary icosahedral group"));
    }
    return r;
  }

  GadgetReport m_minus_s(Presentation const& g, AuditOptions const& options) {
    GadgetReport const  pe = perfect_embed(g, false, options);
    Presentation const& p  = pe.output;
    Word const          b  = gen(g.generator_count() + 2);
    std::pair<Word, Word> const pair{b, power(b, 2)};
    Presentation const k
        = hnn_extension(p, fresh_name(p, "s"), std::span(&pair, 1));
    Word const s = gen(p.generator_count());

    GadgetReport r;
    r.output        = k;
    r.provenance    = "m_minus_s";
    r.generator_map = identity_map(g);
    r.stages.emplace_back("P", p);
    r.audit.push_back(audit_h1_z(r.output));
    if (options.semidecide) {
      r.audit.push_back({"normally generated by s",
                         weight_one_witness_check(k, s, options.max_cosets)});
    } else {
      r.audit.push_back(skipped("normally generated by s"));
    }
    return r;
  }

  GadgetReport weight_gadget(Presentation const& u,
                             generator_index     u1,
                             generator_index     u2,
                             Word const&         w,
                             AuditOptions const& options) {
    if (u1 >= u.generator_count() || u2 >= u.generator_count() || u1 == u2) {
      throw PresentationError("weight gadget needs two distinct designated "
                              "generators");
    }
    for (auto const& x : w) {
      if (x.gen != u1 && x.gen != u2) {
        throw PresentationError("w uses a generator other than "
                                + u.name(u1) + " and " + u.name(u2));
      }
    }
    // K: iterated HNN extension of U.
    Builder           kb(u);
    std::size_t const y1 = kb.add("y1");
    std::size_t const y2 = kb.add("y2");
    std::size_t const z  = kb.add("z");
    for (auto [y, ui] : {std::pair{y1, std::size_t{u1}}, {y2, std::size_t{u2}}}) {
      kb.rels.push_back(invert(gen(y)) * gen(ui) * gen(y) * power(gen(ui), -2));
    }
    for (auto y : {y1, y2}) {
      kb.rels.push_back(invert(gen(z)) * gen(y) * gen(z) * power(gen(y), -2));
    }
    Presentation const k = kb.build();

    // D_w = (K * Q) / <<w t^-1, z r^-1>>
    Builder           db(k);
    std::size_t const rq = db.add("r");
    std::size_t const sq = db.add("s");
    std::size_t const tq = db.add("t");
    db.rels.push_back(invert(gen(sq)) * gen(rq) * gen(sq) * power(gen(rq), -2));
    db.rels.push_back(invert(gen(tq)) * gen(sq) * gen(tq) * power(gen(sq), -2));
    db.rels.push_back(w * invert(gen(tq)));
    db.rels.push_back(gen(z) * invert(gen(rq)));
    Presentation const dw = db.build();

    Presentation const zf({fresh_name(dw, "g0")});
    Presentation const gw = free_product(zf, dw);

    GadgetReport r;
    r.output        = gw;
    r.provenance    = "weight_gadget";
    r.generator_map = identity_map(u, 1);
    r.stages.emplace_back("K", k);
    r.stages.emplace_back("D_w", dw);
    auto const inv = h1(gw);
    r.audit.push_back({"H1 = " + to_string(inv), CheckOutcome::yes()});
    if (options.semidecide && w.empty()) {
      r.audit.push_back({"D_w trivial",
                         is_trivial_bounded(dw, options.max_cosets)});
    }
    return r;
  }

  GadgetReport homology_gadget(Presentation const&              g,
                               Presentation const&              u,
                               Presentation const&              y,
                               std::span<generator_index const> ys,
                               Word const&                      w,
                               AuditOptions const&              options) {
    (void) options;
    std::size_t const n = g.relator_count();
    if (ys.size() != n) {
      throw PresentationError("need one designated y generator per relator");
    }
    for (auto i : ys) {
      if (i >= y.generator_count()) {
        throw PresentationError("designated y generator out of range");
      }
    }
    if (w.alphabet_bound() > u.generator_count()) {
      throw PresentationError("w is not a word over u");
    }
    auto const fr = is_freely_related(g);
    if (!fr.is_yes()) {
      throw PresentationError("input presentation is not freely related: "
                              + fr.reason);
    }
    Presentation const gfree(
        std::vector<std::string>(g.generators().begin(), g.generators().end()));
    Presentation const all = free_product(free_product(gfree, u), y);
    std::size_t const  mg  = g.generator_count();
    std::size_t const  mu  = u.generator_count();
    auto const         uoff = static_cast<generator_index>(mg);
    auto const         yoff = static_cast<generator_index>(mg + mu);

    std::vector<Word> rels;
    for (auto const& r : u.relators()) {
      rels.push_back(shift(r, uoff));
    }
    for (auto const& r : y.relators()) {
      rels.push_back(shift(r, yoff));
    }
    Word const ww = shift(w, uoff);
    for (std::size_t i = 0; i < n; ++i) {
      rels.push_back(g.relators()[i]
                     * invert(commutator(ww, gen(yoff + ys[i]))));
    }

    GadgetReport r;
    r.output = Presentation({all.generators().begin(), all.generators().end()},
                            std::move(rels));
    r.provenance    = "homology_gadget";
    r.generator_map = identity_map(g);
    r.audit.push_back({"input freely related", fr});
    auto const inv = h1(r.output);
    r.audit.push_back({"H1 = " + to_string(inv), CheckOutcome::yes()});
    return r;
  }

  GadgetReport whitehead_gadget(Presentation const& p,
                                Word const&         w,
                                AuditOptions const& options) {
    if (w.alphabet_bound() > p.generator_count()) {
      throw PresentationError("w is not a word over the input");
    }
    Builder    out(p);
    auto const xs = indices(p.generator_count());
    auto const l  = add_letters(out);
    push_base_relators(out, xs, l, false);
    out.rels.push_back(commutator(w, gen(l.a)) * invert(rhs_iv(l)));
    out.rels.push_back(commutator(w, gen(l.alpha)) * invert(rhs_v(l)));

    GadgetReport r;
    r.output        = out.build();
    r.provenance    = "whitehead_gadget";
    r.generator_map = identity_map(p);
    r.audit.push_back(audit_perfect(r.output));
    if (options.semidecide && w.empty()) {
      r.audit.push_back(
          {"trivial", is_trivial_bounded(r.output, options.max_cosets)});
    }
    return r;
  }

  nlohmann::json to_json(GadgetReport const& r) {
    nlohmann::json j;
    j["presentation"]      = serialize(r.output);
    j["presentation_json"] = to_json(r.output);
    j["provenance"]        = r.provenance;
    j["generator_map"]     = nlohmann::json::object();
    for (auto const& [name, w] : r.generator_map) {
      j["generator_map"][name] = format_word(r.output, w);
    }
    j["audit"] = nlohmann::json::array();
    for (auto const& e : r.audit) {
      j["audit"].push_back({{"check", e.check},
                            {"result", to_string(e.outcome.verdict)},
                            {"reason", e.outcome.reason}});
    }
    return j;
  }

}  // namespace fpg
