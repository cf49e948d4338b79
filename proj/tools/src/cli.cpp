#include "qtor_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "qtor/cluster.hpp"
#include "qtor/dbar.hpp"
#include "qtor/dtilde.hpp"
#include "qtor/error.hpp"
#include "qtor/json_io.hpp"
#include "suites.hpp"

namespace qtor::cli {

using nlohmann::json;

int thread_count() {
  const char* v = std::getenv("QTOR_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) return 1;
  return static_cast<int>(std::min<long>(n, 256));
}

std::vector<std::string> RunConfig::render() const {
  std::vector<std::string> a = {"--type", family, "--rank", std::to_string(rank)};
  if (!orientation.empty()) a.insert(a.end(), {"--orientation", orientation});
  if (anchor) a.insert(a.end(), {"--anchor", std::to_string(anchor->first) + "," + std::to_string(anchor->second)});
  if (window) a.insert(a.end(), {"--window", std::to_string(window)});
  a.insert(a.end(), {"--format", format == Format::Json ? "json" : "text"});
  if (!suite.empty()) a.insert(a.end(), {"--suite", suite});
  return a;
}

namespace {

std::pair<int, int> parse_anchor(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw PreconditionError("anchor must be 'vertex,height'");
  try {
    std::size_t u = 0, v = 0;
    int a = std::stoi(s.substr(0, comma), &u);
    int b = std::stoi(s.substr(comma + 1), &v);
    if (u != comma || v != s.size() - comma - 1) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::logic_error&) {
    throw PreconditionError("anchor must be 'vertex,height', got '" + s + "'");
  }
}

struct Options {
  RunConfig cfg;
  std::string anchor_text;
  std::string format_text = "text";
};

void add_frame_options(CLI::App* app, Options& o) {
  app->add_option("--type", o.cfg.family, "Dynkin family (A, D, E)")->default_val("A");
  app->add_option("--rank", o.cfg.rank, "rank")->default_val(1);
  app->add_option("--orientation", o.cfg.orientation, "arrows 'a>b,c>d' (default: monotonic)");
  app->add_option("--anchor", o.anchor_text, "height anchor 'vertex,height' (default: max xi = 0)");
  app->add_option("--format", o.format_text, "output format")->check(CLI::IsMember({"text", "json"}));
}

void finish_options(Options& o) {
  o.cfg.format = o.format_text == "json" ? Format::Json : Format::Text;
  if (!o.anchor_text.empty()) o.cfg.anchor = parse_anchor(o.anchor_text);
}

// argv-style parse; CLI11 wants the vector reversed.
void parse_into(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
}

ARFrame make_frame(const RunConfig& c) {
  Family fam = parse_family(c.family);
  DynkinDatum d = DynkinDatum::make(fam, c.rank);
  Orientation q = c.orientation.empty() ? Orientation::monotonic(d) : Orientation::parse(c.orientation);
  return ARFrame::build(fam, c.rank, q, c.anchor);
}

json value_json(const RootRational& v) { return {{"text", v.to_string()}, {"value", rr_to_json(v)}}; }

void emit_value(std::ostream& out, const RunConfig& c, const std::string& what, const RootRational& v) {
  if (c.format == Format::Json) {
    json j = value_json(v);
    j["input"] = what;
    out << j.dump(2) << "\n";
  } else {
    out << what << " = " << v.to_string() << "\n";
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw PreconditionError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return v;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"config"};
  Options o;
  add_frame_options(&app, o);
  app.add_option("--window", o.cfg.window);
  app.add_option("--suite", o.cfg.suite);
  parse_into(app, args);
  finish_options(o);
  return o.cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation of D-tilde and D-bar on simply-laced root data", "qtor"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  int i = 0, j = 0, p = 0, k = 0, mmax = 0;
  std::string mono, beta_text, word_text, file, seq_text, policy = "max";
  bool quotient = false, print = false, via_pair = false;
  long tmax = 0;
  unsigned seed = 1;

  auto* info = app.add_subcommand("info", "frame data: xi, star, n_Q, gamma, word, phi");
  auto* ct = app.add_subcommand("ctilde", "coefficients C~_ij(m) for m = 1..mmax");
  ct->add_option("i", i)->required();
  ct->add_option("j", j)->required();
  ct->add_option("mmax", mmax)->required()->check(CLI::NonNegativeNumber);
  auto* dy = app.add_subcommand("dtilde-y", "D~(Y_{i,p})");
  dy->add_option("i", i)->required();
  dy->add_option("p", p)->required();
  auto* dk = app.add_subcommand("dtilde-kr", "D~ of the KR class X^{(k)}_{i,p}");
  dk->add_option("i", i)->required();
  dk->add_option("p", p)->required();
  dk->add_option("k", k)->required();
  auto* dm = app.add_subcommand("dtilde-monomial", "D~ of a Laurent monomial 'Y[i,p]^e*...'");
  dm->add_option("monomial", mono)->required();
  auto* dc = app.add_subcommand("dbar-cuspidal", "D-bar of the dual root vector of a positive root");
  dc->add_option("--beta", beta_text, "root coordinates 'c1,...,cn'")->required();
  dc->add_flag("--via-pair", via_pair, "use the minimal-pair recursion even where a closed value exists");
  dc->add_option("--policy", policy, "minimal-pair tie-break")->check(CLI::IsMember({"max", "min"}));
  auto* df = app.add_subcommand("dbar-flag", "flag-minor products P_j of a reduced word of w0");
  df->add_option("--word", word_text, "reduced word 'i1,i2,...' (default: the adapted word)");
  auto* dw = app.add_subcommand("dbar-weights", "D-bar from weight-space data");
  dw->add_option("--file", file, "JSON list of {word:[...], dim:k}")->required();
  auto* mu = app.add_subcommand("mutate", "mutate the initial seed");
  mu->add_option("--window", o.cfg.window, "window M (default 2N)");
  mu->add_flag("--quotient", quotient, "specialize frozen values to 1");
  mu->add_option("--seq", seq_text, "vertices 'v1,v2,...'");
  auto* sd = app.add_subcommand("seed", "initial seed of a window");
  sd->add_option("--window", o.cfg.window, "window M (default 2N)");
  sd->add_flag("--quotient", quotient, "specialize frozen values to 1");
  sd->add_flag("--print", print, "list the arrows");
  auto* vf = app.add_subcommand("verify", "re-check identities on this frame");
  vf->add_option("--suite", o.cfg.suite, "suite name or 'all'")->default_val("all");
  vf->add_option("--tmax", tmax, "last position for the properties suite (default 2N)");
  vf->add_option("--seed", seed, "random seed for randomized suites");

  for (auto* sub : {info, ct, dy, dk, dm, dc, df, dw, mu, sd, vf}) add_frame_options(sub, o);

  try {
    parse_into(app, args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    finish_options(o);
    const RunConfig& c = o.cfg;
    const ARFrame f = make_frame(c);
    const CtildeTable table(f.datum());
    const bool js = c.format == Format::Json;

    if (info->parsed()) {
      json j;
      j["type"] = f.datum().name();
      j["orientation"] = f.orientation().to_string();
      j["N"] = f.N();
      j["h"] = f.h();
      json verts = json::array();
      for (int v = 1; v <= f.rank(); ++v)
        verts.push_back({{"vertex", v}, {"xi", f.xi(v)}, {"star", f.star(v)}, {"nQ", f.nQ(v)},
                         {"gamma", f.gamma(v).coords()}});
      j["vertices"] = verts;
      j["word"] = f.word(2L * f.N());
      json pos = json::array();
      for (long t = 1; t <= 2L * f.N(); ++t) {
        auto x = f.phi_inv(t);
        auto [b, e] = f.beta_eps(x);
        pos.push_back({{"t", t}, {"i", x.i}, {"p", x.p}, {"beta", b.coords()}, {"eps", e}});
      }
      j["positions"] = pos;
      if (js) {
        out << j.dump(2) << "\n";
      } else {
        out << f.datum().name() << "  Q = " << (f.orientation().to_string().empty() ? "-" : f.orientation().to_string())
            << "  N = " << f.N() << "  h = " << f.h() << "\n";
        for (int v = 1; v <= f.rank(); ++v)
          out << "  vertex " << v << ": xi = " << f.xi(v) << ", star = " << f.star(v) << ", nQ = " << f.nQ(v)
              << ", gamma = " << f.gamma(v).to_string() << "\n";
        out << "word (2N): " << word_to_string(f.word(2L * f.N())) << "\n";
        for (long t = 1; t <= 2L * f.N(); ++t) {
          auto x = f.phi_inv(t);
          auto [b, e] = f.beta_eps(x);
          out << "  t = " << t << "  " << x.to_string() << "  beta = " << b.to_string() << "  eps = " << e << "\n";
        }
      }
      return 0;
    }

    if (ct->parsed()) {
      if (i < 1 || i > f.rank() || j < 1 || j > f.rank()) throw PreconditionError("vertex out of range");
      json rows = json::array();
      for (int m = 1; m <= mmax; ++m) {
        auto v = table(i, j, m);
        if (js) rows.push_back({{"i", i}, {"j", j}, {"m", m}, {"value", v}});
        else out << i << " " << j << " " << m << " " << v << "\n";
      }
      if (js) out << rows.dump(2) << "\n";
      return 0;
    }

    DtildeEngine eng(f, table);
    if (dy->parsed()) {
      emit_value(out, c, "D~(Y[" + std::to_string(i) + "," + std::to_string(p) + "])", eng.Y({i, p}));
      return 0;
    }
    if (dk->parsed()) {
      KRLabel l{i, p, k};
      emit_value(out, c, "D~(" + l.to_string() + ")", eng.KR(l));
      return 0;
    }
    if (dm->parsed()) {
      auto m = TorusMonomial::parse(mono);
      emit_value(out, c, "D~(" + m.to_string() + ")", eng.monomial(m));
      return 0;
    }

    if (dc->parsed()) {
      auto coords = parse_int_list(beta_text);
      if (static_cast<int>(coords.size()) != f.rank()) throw PreconditionError("--beta needs one coordinate per vertex");
      Root b = Root::from_coords(coords);
      if (!f.datum().is_root(b)) throw PreconditionError(b.to_string() + " is not a positive root");
      auto pol = policy == "min" ? PairPolicy::MinGamma : PairPolicy::MaxGamma;
      const bool closed = !via_pair && f.datum().family() != Family::E &&
                          f.orientation().to_string() == Orientation::monotonic(f.datum()).to_string();
      if (closed) {
        emit_value(out, c, "D-bar(S_" + b.to_string() + ")", cuspidal_value(f, b));
        return 0;
      }
      auto res = cuspidal_via_minimal_pair(f, b, pol);
      if (js) {
        json jo = {{"input", "D-bar(S_" + b.to_string() + ")"}, {"applicable", res.applicable}, {"word", res.word}};
        if (res.applicable) jo.update(value_json(res.value));
        else jo["blocked_at"] = res.blocked_at.coords();
        out << jo.dump(2) << "\n";
      } else if (res.applicable) {
        out << "D-bar(S_" << b.to_string() << ") = " << res.value.to_string() << "\n";
      } else {
        out << "D-bar(S_" << b.to_string() << "): inapplicable (head word at " << res.blocked_at.to_string()
            << " is not dominant minuscule)\n";
      }
      return 0;
    }

    if (df->parsed()) {
      Word w = word_text.empty() ? f.reduced_word() : parse_word(word_text);
      auto tab = flag_minor_values(f.datum(), w);
      if (js) {
        json rows = json::array();
        for (std::size_t t = 0; t < tab.values.size(); ++t)
          rows.push_back({{"j", t + 1}, {"letter", w[t]}, {"beta", tab.betas[t].coords()},
                          {"P", value_json(tab.values[t])}});
        out << json{{"word", w}, {"minors", rows}}.dump(2) << "\n";
      } else {
        out << "word " << word_to_string(w) << "\n";
        for (std::size_t t = 0; t < tab.values.size(); ++t)
          out << "P_" << t + 1 << " = " << tab.values[t].to_string() << "\n";
      }
      return 0;
    }

    if (dw->parsed()) {
      std::ifstream in(file);
      if (!in) throw PreconditionError("cannot open " + file);
      json data;
      try {
        in >> data;
      } catch (const json::exception& e) {
        throw PreconditionError(std::string("malformed weight file: ") + e.what());
      }
      if (!data.is_array()) throw PreconditionError("weight file must be a JSON list");
      WeightData wd;
      try {
        for (const auto& e : data) wd.push_back({e.at("word").get<Word>(), e.at("dim").get<long>()});
      } catch (const json::exception& e) {
        throw PreconditionError(std::string("weight entry needs word and dim: ") + e.what());
      }
      emit_value(out, c, "D-bar(weights)", dbar_weight_sum(f.datum(), wd));
      return 0;
    }

    if (mu->parsed() || sd->parsed()) {
      const int M = c.window ? c.window : 2 * f.N();
      Seed s0 = initial_seed(f, table, M, quotient);
      std::vector<int> seq = parse_int_list(seq_text);
      Seed s = mutate_sequence(s0, seq);
      if (js) {
        json vals = json::array();
        for (int v = 1; v <= M; ++v) {
          json jv = value_json(s.value(v));
          jv["vertex"] = v;
          jv["frozen"] = s.quiver.is_frozen(v);
          vals.push_back(jv);
        }
        json j = {{"window", M}, {"sequence", seq}, {"values", vals}};
        if (sd->parsed() || print) {
          json arr = json::array();
          for (auto [u, v, m] : s.quiver.arrows()) arr.push_back({{"from", u}, {"to", v}, {"mult", m}});
          j["arrows"] = arr;
        }
        out << j.dump(2) << "\n";
      } else {
        if (!seq.empty()) {
          std::ostringstream ss;
          for (std::size_t q = 0; q < seq.size(); ++q) ss << (q ? "," : "") << seq[q];
          out << "after mutating at " << ss.str() << "\n";
        }
        for (int v = 1; v <= M; ++v)
          out << "x" << v << (s.quiver.is_frozen(v) ? " (frozen)" : "") << " = " << s.value(v).to_string() << "\n";
        if (print) {
          out << "arrows:\n";
          for (auto [u, v, m] : s.quiver.arrows()) out << "  " << u << " -> " << v << (m > 1 ? " x" + std::to_string(m) : "") << "\n";
        }
      }
      return 0;
    }

    if (vf->parsed()) {
      SuiteOptions so{tmax, thread_count(), seed};
      std::vector<std::string> names;
      if (c.suite == "all") {
        names = applicable_suites(f);
      } else {
        const auto& all = suite_names();
        if (std::find(all.begin(), all.end(), c.suite) == all.end())
          throw PreconditionError("unknown suite '" + c.suite + "'");
        names = {c.suite};
      }
      bool ok = true;
      json results = json::array();
      for (const auto& name : names) {
        auto r = run_suite(name, f, table, so);
        ok = ok && r.ok;
        if (js) {
          results.push_back({{"suite", r.name}, {"ok", r.ok}, {"checks", r.checks}, {"witnesses", r.witnesses},
                             {"notes", r.notes}});
        } else {
          out << r.name << ": " << (r.ok ? "PASS" : "FAIL") << " (" << r.checks << " checks)\n";
          for (const auto& n : r.notes) out << "  " << n << "\n";
          for (const auto& w : r.witnesses) out << "  witness: " << w << "\n";
        }
      }
      if (js) out << json{{"type", f.datum().name()}, {"ok", ok}, {"results", results}}.dump(2) << "\n";
      return ok ? 0 : 1;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qtor::cli
