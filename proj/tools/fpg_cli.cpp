// fpg: command-line front end for the presentation toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpg/abelian.hpp"
#include "fpg/construct.hpp"
#include "fpg/coset.hpp"
#include "fpg/identity.hpp"
#include "fpg/presentation.hpp"
#include "fpg/recognize.hpp"
#include "fpg/subgroup.hpp"
#include "fpg/tietze.hpp"

namespace {

  using fpg::Presentation;
  using fpg::Word;
  using json = nlohmann::json;

  constexpr int schema_version = 1;
  constexpr int exit_usage     = 3;
  constexpr int exit_input     = 4;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Common {
    std::string format = "text";
    std::string input;
    std::string inline_text;
  };

  std::string slurp(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::string trim(std::string s) {
    auto const b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
      return {};
    }
    auto const e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  Presentation read_presentation_text(std::string const& text) {
    std::string const t = trim(text);
    if (!t.empty() && t.front() == '{') {
      return fpg::presentation_from_json(json::parse(t));
    }
    return fpg::parse(t);
  }

  std::string source_text(Common const& c) {
    if (!c.input.empty()) {
      return slurp(c.input);
    }
    if (c.inline_text == "-") {
      return slurp("-");
    }
    if (c.inline_text.empty()) {
      throw UsageError("no input: pass it inline or with --input");
    }
    return c.inline_text;
  }

  Presentation read_presentation(Common const& c) {
    return read_presentation_text(source_text(c));
  }

  std::vector<Word> parse_words(Presentation const&             p,
                                std::vector<std::string> const& texts) {
    std::vector<Word> out;
    for (auto const& t : texts) {
      out.push_back(fpg::parse_word(p, t));
    }
    return out;
  }

  std::size_t env_max_cosets() {
    if (char const* v = std::getenv("FPG_MAX_COSETS")) {
      try {
        long n = std::stol(v);
        if (n > 0) {
          return static_cast<std::size_t>(n);
        }
      } catch (std::exception const&) {
      }
      throw UsageError("FPG_MAX_COSETS must be a positive integer");
    }
    return fpg::default_max_cosets;
  }

  json envelope(std::string const& command) {
    return json{{"schema_version", schema_version}, {"command", command}};
  }

  json outcome_json(fpg::CheckOutcome const& o) {
    return json{{"verdict", fpg::to_string(o.verdict)},
                {"budget_used", o.budget_used},
                {"reason", o.reason}};
  }

  void emit(Common const& c, json const& j, std::string const& text) {
    if (c.format == "json") {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  void add_common(CLI::App* sub, Common& c, bool positional = true) {
    if (positional) {
      sub->add_option("presentation", c.inline_text,
                      "presentation text, JSON, or - for stdin");
    }
    sub->add_option("--input,-i", c.input, "read the input from a file (- = stdin)");
    sub->add_option("--format,-f", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  }

  ////////////////////////////////////////////////////////////////////////

  int run_h1(Common const& c) {
    auto const p   = read_presentation(c);
    auto const inv = fpg::h1(p);
    json       j   = envelope("h1");
    j["h1"]        = fpg::to_json(inv);
    j["text"]      = fpg::to_string(inv);
    emit(c, j, fpg::to_string(inv) + "\n");
    return 0;
  }

  int run_snf(Common const& c) {
    auto const m  = fpg::matrix_from_json(json::parse(source_text(c)));
    auto const sf = fpg::smith_normal_form(m);
    json       j  = envelope("snf");
    j["D"]        = fpg::to_json(sf.d);
    j["U"]        = fpg::to_json(sf.u);
    j["V"]        = fpg::to_json(sf.v);
    json factors  = json::array();
    for (auto const& d : sf.invariant_factors()) {
      factors.push_back(d.get_str());
    }
    j["invariant_factors"] = factors;
    // D, U and V are matrices: JSON is the natural text form too.
    std::cout << j.dump(c.format == "json" ? 2 : -1) << '\n';
    return 0;
  }

  std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                            : "x" + std::to_string(i + 1));
    }
    return out;
  }

  int run_fold(Common const&                   c,
               std::size_t                     alphabet,
               std::vector<std::string> const& words_text,
               std::string const&              member) {
    if (alphabet == 0) {
      throw UsageError("--alphabet must be positive");
    }
    Presentation const f(default_names(alphabet));
    auto const         words = parse_words(f, words_text);
    auto const         g     = fpg::fold(alphabet, words);
    bool const         basis = fpg::is_basis(alphabet, words);
    json               j     = envelope("fold");
    j["rank"]                = fpg::rank(g);
    j["vertices"]            = g.vertex_count();
    j["edges"]               = g.edges().size();
    j["basis"]               = basis;
    std::ostringstream text;
    text << "rank " << fpg::rank(g) << '\n'
         << "basis " << (basis ? "Yes" : "No") << '\n';
    int code = 0;
    if (!member.empty()) {
      bool in       = fpg::contains(g, fpg::parse_word(f, member));
      j["contains"] = in;
      text << "contains " << (in ? "Yes" : "No") << '\n';
      code = in ? 0 : 1;
    }
    emit(c, j, text.str());
    return code;
  }

  int run_coset(Common const&                   c,
                std::vector<std::string> const& subgroup,
                std::size_t                     max,
                bool                            dump) {
    auto const p      = read_presentation(c);
    auto const h      = parse_words(p, subgroup);
    auto const result = fpg::enumerate(p, h, max);
    json       j      = envelope("coset-enum");
    std::ostringstream text;
    int                code = 0;
    if (auto const* f = std::get_if<fpg::Finite>(&result)) {
      j["result"]      = "Finite";
      j["index"]       = f->index;
      j["cosets_used"] = f->cosets_used;
      text << "Finite(" << f->index << ")\n";
      if (dump) {
        j["table"] = fpg::to_json(f->table);
        text << fpg::to_json(f->table).dump() << '\n';
      }
    } else {
      auto used        = std::get<fpg::Exhausted>(result).cosets_used;
      j["result"]      = "Exhausted";
      j["cosets_used"] = used;
      text << "Exhausted(" << used << ")\n";
      code = 2;
    }
    emit(c, j, text.str());
    return code;
  }

  struct ConstructArgs {
    std::string kind;
    std::string w;
    bool        addendum = false;
    std::string u1, u2;
    std::string u_input, y_input;
    std::vector<std::string> ys;
  };

  int run_construct(Common const& c, ConstructArgs const& a) {
    fpg::AuditOptions opts;
    if (std::getenv("FPG_MAX_COSETS")) {
      opts.max_cosets = env_max_cosets();
    }
    auto const  p   = read_presentation(c);
    auto        w   = [&](Presentation const& over) {
      return a.w.empty() ? Word{} : fpg::parse_word(over, a.w);
    };
    fpg::GadgetReport r;
    if (a.kind == "prop1") {
      r = fpg::perfect_embed(p, a.addendum, opts);
    } else if (a.kind == "k3embed") {
      r = fpg::k3_embed(p, opts);
    } else if (a.kind == "k3k2") {
      r = fpg::k3_minus_k2(p, opts);
    } else if (a.kind == "sk3") {
      r = fpg::s_minus_k3(p, opts);
    } else if (a.kind == "ms") {
      r = fpg::m_minus_s(p, opts);
    } else if (a.kind == "weight") {
      if (p.generator_count() < 2) {
        throw fpg::PresentationError("weight gadget needs two generators");
      }
      auto u1 = a.u1.empty() ? fpg::generator_index{0} : p.require(a.u1);
      auto u2 = a.u2.empty() ? fpg::generator_index{1} : p.require(a.u2);
      r       = fpg::weight_gadget(p, u1, u2, w(p), opts);
    } else if (a.kind == "homology") {
      if (a.u_input.empty() || a.y_input.empty()) {
        throw UsageError("homology needs --u and --y");
      }
      auto const u = read_presentation_text(slurp(a.u_input));
      auto const y = read_presentation_text(slurp(a.y_input));
      std::vector<fpg::generator_index> ys;
      if (a.ys.empty()) {
        for (std::size_t i = 0; i < p.relator_count(); ++i) {
          ys.push_back(static_cast<fpg::generator_index>(i));
        }
      } else {
        for (auto const& n : a.ys) {
          ys.push_back(y.require(n));
        }
      }
      r = fpg::homology_gadget(p, u, y, ys, w(u), opts);
    } else if (a.kind == "whitehead") {
      r = fpg::whitehead_gadget(p, w(p), opts);
    } else {
      throw UsageError("unknown construction " + a.kind);
    }
    json j = envelope("construct");
    j.update(fpg::to_json(r));
    if (c.format == "json") {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << fpg::serialize(r.output) << '\n';
      for (auto const& e : r.audit) {
        std::cerr << e.check << ": " << fpg::to_string(e.outcome.verdict)
                  << '\n';
      }
    }
    return r.audit_passed() ? 0 : 1;
  }

  struct CheckArgs {
    std::string              kind;
    std::size_t              h = 0;
    std::vector<std::string> candidates;
    std::size_t              budget = 0;
    bool                     verbose = false;
    std::string              identities;
  };

  json words_json(Presentation const& p, std::vector<Word> const& ws) {
    json out = json::array();
    for (auto const& w : ws) {
      out.push_back(fpg::format_word(p, w));
    }
    return out;
  }

  int run_check(Common const& c, CheckArgs const& a) {
    auto const        p = read_presentation(c);
    json              j = envelope("check " + a.kind);
    json              evidence;
    fpg::CheckOutcome outcome;
    if (a.kind == "wirtinger") {
      auto r  = fpg::is_wirtinger(p);
      outcome = r.outcome;
      evidence = json::array();
      for (auto const& wt : r.witnesses) {
        evidence.push_back({{"i", p.name(wt.i)},
                            {"j", p.name(wt.j)},
                            {"w", fpg::format_word(p, wt.w)}});
      }
    } else if (a.kind == "artin") {
      auto r   = fpg::artin_check(p);
      outcome  = r.outcome;
      evidence = {{"betas", words_json(p, r.betas)},
                  {"conjugators", words_json(p, r.conjugators)}};
      if (r.mu) {
        evidence["mu"] = r.mu->cycle_string();
      }
    } else if (a.kind == "twoknot") {
      std::size_t steps = a.budget == 0 ? 1000 : a.budget;
      auto        r     = fpg::two_knot_check(p, a.h, steps);
      outcome           = r.outcome;
      evidence = {{"betas", words_json(p, r.betas)},
                  {"betas_prime", words_json(p, r.betas_prime)},
                  {"orbits", r.orbits}};
      if (r.mu) {
        evidence["mu"] = r.mu->cycle_string();
      }
      auto trace_json = [](std::optional<fpg::EliminationTrace> const& t) {
        json out = json::array();
        if (t) {
          for (auto const& s : t->steps) {
            out.push_back({{"generator", s.name}, {"relator", s.relator}});
          }
        }
        return out;
      };
      evidence["trace"]       = trace_json(r.trace);
      evidence["trace_prime"] = trace_json(r.trace_prime);
    } else if (a.kind == "kervaire") {
      std::size_t const max = a.budget == 0 ? env_max_cosets() : a.budget;
      auto const        ts  = parse_words(p, a.candidates);
      std::vector<fpg::IdentitySequence> ids;
      if (!a.identities.empty()) {
        for (auto const& e : json::parse(slurp(a.identities))) {
          ids.push_back(fpg::identity_from_json(p, e));
        }
      }
      auto const r = fpg::kervaire_report(p, ts, max, ids);
      json       weights = json::array();
      bool       weight_yes = false;
      for (auto const& [t, o] : r.weight) {
        weights.push_back({{"candidate", fpg::format_word(p, t)},
                           {"outcome", outcome_json(o)}});
        weight_yes = weight_yes || o.is_yes();
      }
      bool const h2 = r.h2 == fpg::H2Status::certified;
      evidence      = {{"h1", fpg::to_string(r.h1)},
                       {"h1_infinite_cyclic", r.h1_infinite_cyclic},
                       {"weight", weights},
                       {"h2", h2 ? "certified" : "not determined"},
                       {"h2_reason", r.h2_reason}};
      if (!r.h1_infinite_cyclic) {
        outcome = fpg::CheckOutcome::no("H1 = " + fpg::to_string(r.h1));
      } else if (weight_yes && h2) {
        outcome = fpg::CheckOutcome::yes("all three conditions certified");
      } else {
        outcome = fpg::CheckOutcome::unknown(
            std::string("H1 = Z; weight ") + (weight_yes ? "Yes" : "not shown")
            + "; H2 " + (h2 ? "certified" : "not determined"));
      }
    } else {
      throw UsageError("unknown check " + a.kind);
    }
    j["outcome"] = outcome_json(outcome);
    if (a.verbose || a.kind == "kervaire") {
      j["evidence"] = evidence;
    }
    std::ostringstream text;
    text << fpg::to_string(outcome.verdict) << '\n';
    if (a.verbose) {
      if (!outcome.reason.empty()) {
        text << outcome.reason << '\n';
      }
      text << evidence.dump() << '\n';
    } else if (a.kind == "kervaire") {
      text << "H1 " << evidence["h1"].get<std::string>() << '\n';
      for (auto const& w : evidence["weight"]) {
        text << "weight " << w["candidate"].get<std::string>() << ' '
             << w["outcome"]["verdict"].get<std::string>() << '\n';
      }
      text << "H2 " << evidence["h2"].get<std::string>() << '\n';
    }
    emit(c, j, text.str());
    return fpg::exit_code(outcome.verdict);
  }

  int run_verify_identity(Common const& c, std::string const& identity) {
    auto const p  = read_presentation(c);
    std::string const src
        = !identity.empty() && (identity.front() == '[') ? identity
                                                        : slurp(identity);
    auto const pi = fpg::identity_from_json(p, json::parse(src));
    for (auto const& e : pi.entries) {
      if (e.relator_index >= p.relator_count()) {
        throw fpg::PresentationError("relator index out of range");
      }
    }
    bool const ok  = fpg::verify_identity(p, pi);
    Word const out = fpg::identity_product(p.relators(), pi);
    json       j   = envelope("verify-identity");
    j["verdict"]   = ok ? "Yes" : "No";
    j["product"]   = fpg::format_word(p, out);
    std::string text = ok ? "Yes\n" : "No\n";
    emit(c, j, text);
    return ok ? 0 : 1;
  }

  int run_enumerate(Common const& c, std::size_t count, std::size_t depth) {
    fpg::WeightOneBudget budget;
    budget.max_depth = depth;
    fpg::WeightOneEnumerator en(budget);
    json                     j     = envelope("enumerate");
    json                     items = json::array();
    std::ostringstream       text;
    for (std::size_t i = 0; i < count; ++i) {
      auto e = en.next();
      if (!e) {
        break;
      }
      Presentation const with_witness = fpg::quotient(e->presentation, {e->witness});
      items.push_back({{"presentation", fpg::serialize(e->presentation)},
                       {"witness", fpg::format_word(with_witness, e->witness)},
                       {"moves", e->trace.size()}});
      text << fpg::serialize(e->presentation) << " ; "
           << fpg::format_word(with_witness, e->witness) << '\n';
    }
    j["emissions"] = items;
    emit(c, j, text.str());
    return 0;
  }

  int run_tietze(Common const& c, std::size_t limit) {
    auto const           p = read_presentation(c);
    fpg::TietzeNeighbors nb(p, fpg::TietzeBudget{});
    json                 j     = envelope("tietze");
    json                 items = json::array();
    std::ostringstream   text;
    for (std::size_t i = 0; i < limit; ++i) {
      auto n = nb.next();
      if (!n) {
        break;
      }
      items.push_back({{"move", fpg::to_json(p, n->second)},
                       {"result", fpg::serialize(n->first)}});
      text << fpg::to_string(n->second.kind) << ": "
           << fpg::serialize(n->first) << '\n';
    }
    j["neighbors"] = items;
    emit(c, j, text.str());
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fpg: finitely presented group toolkit"};
  app.require_subcommand(1);

  Common common;

  auto* h1 = app.add_subcommand("h1", "abelian invariants of H1");
  add_common(h1, common);

  auto* snf = app.add_subcommand("snf", "Smith normal form of a JSON matrix");
  add_common(snf, common);

  std::size_t              alphabet = 0;
  std::vector<std::string> words;
  std::string              member;
  auto* fold = app.add_subcommand("fold", "Stallings folding of a subgroup");
  add_common(fold, common, false);
  fold->add_option("--alphabet", alphabet, "free group rank")->required();
  fold->add_option("--words", words, "subgroup generators")->delimiter(',');
  fold->add_option("--contains", member, "membership query");

  std::vector<std::string> subgroup;
  std::size_t              max_cosets = 0;
  bool                     dump       = false;
  auto* coset = app.add_subcommand("coset-enum", "bounded coset enumeration");
  add_common(coset, common);
  coset->add_option("--subgroup", subgroup, "subgroup generators")
      ->delimiter(',');
  coset->add_option("--max", max_cosets, "live coset budget")
      ->check(CLI::PositiveNumber);
  coset->add_flag("--dump-table", dump, "print the coset table");

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "embedding gadgets");
  construct->add_option("kind", cargs.kind, "construction")
      ->required()
      ->check(CLI::IsMember({"prop1", "k3embed", "k3k2", "sk3", "ms", "weight",
                             "homology", "whitehead"}));
  add_common(construct, common);
  construct->add_option("--w", cargs.w, "word parameter");
  construct->add_flag("--addendum", cargs.addendum, "extra (iii) relation");
  construct->add_option("--u1", cargs.u1, "first designated generator");
  construct->add_option("--u2", cargs.u2, "second designated generator");
  construct->add_option("--u", cargs.u_input, "file with the U presentation");
  construct->add_option("--y", cargs.y_input, "file with the Y presentation");
  construct->add_option("--ys", cargs.ys, "designated Y generators")
      ->delimiter(',');

  CheckArgs kargs;
  auto* check = app.add_subcommand("check", "recognizers");
  check->set_help_flag("--help", "print this help message and exit");
  check->add_option("kind", kargs.kind, "recognizer")
      ->required()
      ->check(CLI::IsMember({"wirtinger", "artin", "twoknot", "kervaire"}));
  add_common(check, common);
  check->add_option("--h", kargs.h, "number of x_{2i-1}^-1 x_{2i} relators");
  check->add_option("--candidates", kargs.candidates, "weight candidates")
      ->delimiter(',');
  check->add_option("--budget", kargs.budget,
                    "cosets (kervaire) or elimination steps (twoknot)")
      ->check(CLI::PositiveNumber);
  check->add_option("--identities", kargs.identities,
                    "file with a JSON list of identity sequences");
  check->add_flag("--verbose,-v", kargs.verbose, "print evidence");

  std::string identity;
  auto* verify = app.add_subcommand("verify-identity", "check an identity sequence");
  add_common(verify, common);
  verify->add_option("--identity", identity,
                     "JSON [[conjugator, index, sign], ...] or a file")
      ->required();

  std::size_t count = 10;
  std::size_t depth = 3;
  auto* enumerate = app.add_subcommand("enumerate", "weight-one enumerator");
  enumerate->add_option("--format,-f", common.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--count,-n", count, "number of emissions");
  enumerate->add_option("--depth", depth, "maximum Tietze depth");

  std::size_t limit = 20;
  auto* tietze = app.add_subcommand("tietze", "list Tietze neighbours");
  add_common(tietze, common);
  tietze->add_option("--limit", limit, "number of neighbours");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*h1) {
      return run_h1(common);
    }
    if (*snf) {
      return run_snf(common);
    }
    if (*fold) {
      return run_fold(common, alphabet, words, member);
    }
    if (*coset) {
      return run_coset(common, subgroup,
                       max_cosets == 0 ? env_max_cosets() : max_cosets, dump);
    }
    if (*construct) {
      return run_construct(common, cargs);
    }
    if (*check) {
      return run_check(common, kargs);
    }
    if (*verify) {
      return run_verify_identity(common, identity);
    }
    if (*enumerate) {
      return run_enumerate(common, count, depth);
    }
    if (*tietze) {
      return run_tietze(common, limit);
    }
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return exit_usage;
  } catch (fpg::ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_input;
  } catch (fpg::PresentationError const& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_input;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "invalid JSON: " << e.what() << '\n';
    return exit_input;
  } catch (std::invalid_argument const& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_input;
  }
  return exit_usage;
}
