// Batch front-end: load a generalized Cartan matrix, run one query, emit
// NDJSON records on standard output.  Exit status 0 on success, nonzero on
// parse or validation errors.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wm/cells.hpp"
#include "wm/expr.hpp"
#include "wm/gcmio.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Session {
  std::string gcm_path;
  long long descent_cap = wm::kDefaultDescentCap;
  int ball_bound = 4;
  int face_budget = 4;
  int height_cap = wm::kDefaultHeightCap;
  std::string out_dot;
};

json subset_json(wm::Subset s) {
  json arr = json::array();
  for (int i : wm::subset_members(s)) arr.push_back(i + 1);
  return arr;
}

json lengths_json(const wm::LengthTriple& t) {
  return json{{"pp", t.pp}, {"mm", t.mm}, {"mp", t.mp}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json elem_json(const wm::WeylGroup& w, const wm::MonoidElem& m, bool exact) {
  json j;
  j["expr"] = wm::monoid_expr(w, m);
  j["nf3"] = wm::nf3_display(w, m);
  j["nf1"] = wm::nf1_display(w, m);
  j["nf2"] = wm::nf2_display(w, m);
  j["theta"] = subset_json(m.theta);
  j["lengths"] = lengths_json(wm::lengths(m));
  j["exact"] = exact;
  return j;
}

wm::FaceBudget budget_of(const Session& s) {
  wm::FaceBudget b;
  b.weight = s.face_budget;
  b.descent_cap = std::min<long long>(s.descent_cap, 256);
  return b;
}

wm::OrderKind parse_kind(const std::string& kind) {
  if (kind == "pp") return wm::OrderKind::PP;
  if (kind == "mm") return wm::OrderKind::MM;
  if (kind == "mp") return wm::OrderKind::MP;
  wm::fail(wm::Errc::ParseError, "kind must be pp, mm, or mp");
}

// Deterministic generator for the selftest word sample.
struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }
};

int run_selftest(const wm::WeylGroup& w, const Session& session) {
  const wm::Gcm& g = w.gcm();
  bool all_ok = true;
  auto report = [&](const std::string& suite, bool ok, long long checks) {
    emit(json{{"cmd", "selftest"}, {"suite", suite}, {"pass", ok},
              {"checks", checks}});
    all_ok = all_ok && ok;
  };

  {  // symmetrized matrix is symmetric
    bool ok = true;
    long long checks = 0;
    for (int i = 0; i < g.rank(); ++i)
      for (int j = 0; j < g.rank(); ++j, ++checks)
        ok = ok && wm::Rat(g.a(i, j)) / g.symmetrizer()[i] ==
                       wm::Rat(g.a(j, i)) / g.symmetrizer()[j];
    report("symmetrizer", ok, checks);
  }

  {  // inversion-set size equals length; length parity under generators
    bool ok = true;
    long long checks = 0;
    for (const auto& u : w.ball(3)) {
      ok = ok && static_cast<int>(w.inversion_set(u).size()) == u.length();
      ++checks;
      for (int i = 0; i < g.rank(); ++i, ++checks) {
        int lw = w.compose(w.simple(i), u).length();
        bool descent = w.is_left_descent(u, i);
        ok = ok && lw == u.length() + (descent ? -1 : 1);
      }
    }
    report("weyl-lengths", ok, checks);
  }

  {  // order axioms on a small monoid ball
    auto ball = wm::monoid_ball(w, 3);
    bool ok = true;
    long long checks = 0;
    for (wm::OrderKind kind :
         {wm::OrderKind::PP, wm::OrderKind::MM, wm::OrderKind::MP}) {
      std::vector<std::vector<bool>> le(ball.size(),
                                        std::vector<bool>(ball.size()));
      for (size_t i = 0; i < ball.size(); ++i)
        for (size_t j = 0; j < ball.size(); ++j)
          le[i][j] = wm::order_leq(w, kind, ball[i], ball[j]).holds;
      for (size_t i = 0; i < ball.size(); ++i) {
        ok = ok && le[i][i];
        for (size_t j = 0; j < ball.size(); ++j) {
          if (i != j && le[i][j] && le[j][i]) ok = false;
          for (size_t k = 0; k < ball.size(); ++k)
            if (le[i][j] && le[j][k] && !le[i][k]) ok = false;
          ++checks;
        }
      }
    }
    report("order-axioms", ok, checks);
  }

  {  // canonicalization is idempotent on pseudo-random words
    SplitMix rng{12345};
    const auto specials = wm::special_subsets(g);
    bool ok = true;
    long long checks = 0;
    for (int trial = 0; trial < 100; ++trial, ++checks) {
      std::string expr;
      const int len = 1 + static_cast<int>(rng.bounded(4));
      for (int t = 0; t < len; ++t) {
        if (!expr.empty()) expr += " ";
        if (rng.bounded(3) == 0) {
          wm::Subset th = specials[rng.bounded(specials.size())];
          expr += "e(";
          bool first = true;
          for (int i : wm::subset_members(th)) {
            if (!first) expr += ",";
            expr += std::to_string(i + 1);
            first = false;
          }
          expr += ")";
        } else {
          expr += "s" + std::to_string(1 + rng.bounded(g.rank()));
        }
      }
      auto r = wm::eval_expr(w, expr, budget_of(session));
      auto again = wm::from_parts(
          w, w.compose(r.elem.w1, r.elem.w2), r.elem.theta, r.elem.w3);
      ok = ok && again == r.elem;
      auto back = wm::eval_expr(w, wm::monoid_expr(w, r.elem));
      ok = ok && back.elem == r.elem;
      ok = ok && wm::inverse(w, wm::inverse(w, r.elem)) == r.elem;
    }
    report("normal-forms", ok, checks);
  }

  {  // length deltas match recomputation on a small ball
    auto ball = wm::monoid_ball(w, 3);
    bool ok = true;
    long long checks = 0;
    for (const auto& m : ball)
      for (int i = 0; i < g.rank(); ++i)
        for (wm::GenSide side : {wm::GenSide::Left, wm::GenSide::Right}) {
          wm::MonoidElem gen = wm::unit_element(w, w.simple(i));
          wm::MonoidElem prod = side == wm::GenSide::Left
                                    ? wm::multiply(w, gen, m).elem
                                    : wm::multiply(w, m, gen).elem;
          auto lm = wm::lengths(m), lp = wm::lengths(prod);
          for (wm::LKind kind : {wm::LKind::PP, wm::LKind::MM, wm::LKind::MP}) {
            int delta = wm::length_delta(w, side, i, m, kind);
            ok = ok && delta == wm::length_of(lp, kind) - wm::length_of(lm, kind);
            ok = ok && ((delta == 0) == (prod == m));
            ++checks;
          }
        }
    report("length-deltas", ok, checks);
  }

  {  // standard face intersections certify
    bool ok = true;
    long long checks = 0;
    const auto specials = wm::special_subsets(g);
    for (wm::Subset t1 : specials)
      for (wm::Subset t2 : specials) {
        if (!g.is_special(t1 | t2)) continue;
        auto meet = wm::face_intersect(w, wm::face_of_theta(w, t1),
                                       wm::face_of_theta(w, t2), budget_of(session));
        ok = ok && meet.exact && meet.face.theta == (t1 | t2) &&
             meet.face.rep.is_identity();
        ++checks;
      }
    report("face-meets", ok, checks);
  }

  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl-monoid combinatorics over a generalized Cartan matrix"};
  Session session;
  app.add_option("--gcm", session.gcm_path, "matrix input file")->required();
  app.add_option("--descent-cap", session.descent_cap, "membership descent cap");
  app.add_option("--ball", session.ball_bound, "ball bound for ball/hasse");
  app.add_option("--face-budget", session.face_budget, "face sampling weight");
  app.add_option("--height-cap", session.height_cap, "root window height cap");
  app.add_option("--out-dot", session.out_dot, "DOT output path for hasse");
  app.require_subcommand(1);

  auto* cmd_classify = app.add_subcommand("classify", "component types and special subsets");
  auto* cmd_nf = app.add_subcommand("nf", "normal forms of an element");
  auto* cmd_mul = app.add_subcommand("mul", "product of two elements");
  auto* cmd_inv = app.add_subcommand("inv", "inverse-map image");
  auto* cmd_leq = app.add_subcommand("leq", "extended order comparison");
  auto* cmd_len = app.add_subcommand("len", "extended lengths");
  auto* cmd_delta = app.add_subcommand("delta", "simple-reflection length deltas");
  auto* cmd_ball = app.add_subcommand("ball", "monoid ball by l-+ bound");
  auto* cmd_hasse = app.add_subcommand("hasse", "covers of the monoid ball");
  auto* cmd_act = app.add_subcommand("act", "action on a cone point");
  auto* cmd_selftest = app.add_subcommand("selftest", "run invariant suites");

  std::string expr1, expr2, kind = "pp", side = "left", point_text;
  int gen_index = 1;
  cmd_nf->add_option("expr", expr1)->required();
  cmd_mul->add_option("lhs", expr1)->required();
  cmd_mul->add_option("rhs", expr2)->required();
  cmd_inv->add_option("expr", expr1)->required();
  cmd_leq->add_option("--kind", kind, "pp, mm, or mp");
  cmd_leq->add_option("lhs", expr1)->required();
  cmd_leq->add_option("rhs", expr2)->required();
  cmd_len->add_option("expr", expr1)->required();
  cmd_delta->add_option("--side", side, "left or right");
  cmd_delta->add_option("--gen", gen_index, "generator index (1-based)")->required();
  cmd_delta->add_option("expr", expr1)->required();
  cmd_hasse->add_option("--kind", kind, "pp, mm, or mp");
  cmd_act->add_option("expr", expr1)->required();
  cmd_act->add_option("point", point_text)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (session.descent_cap < 1 || session.ball_bound < 0 ||
        session.face_budget < 1 || session.height_cap < 1)
      wm::fail(wm::Errc::ParseError, "caps must be positive");
    wm::Gcm gcm = wm::load_gcm_file(session.gcm_path);
    wm::WeylGroup w(std::move(gcm));
    const wm::Gcm& g = w.gcm();
    const wm::FaceBudget budget = budget_of(session);

    if (cmd_classify->parsed()) {
      json comps = json::array();
      for (const auto& c : g.components())
        comps.push_back(json{{"indices", subset_json(c.indices)},
                             {"type", wm::block_type_name(c.type)}});
      json specials = json::array();
      for (wm::Subset s : wm::special_subsets(g)) specials.push_back(subset_json(s));
      emit(json{{"cmd", "classify"},
                {"name", g.name()},
                {"rank", g.rank()},
                {"components", comps},
                {"special_subsets", specials}});
    } else if (cmd_nf->parsed()) {
      auto r = wm::eval_expr(w, expr1, budget);
      json j{{"cmd", "nf"}};
      j.update(elem_json(w, r.elem, r.exact));
      emit(j);
    } else if (cmd_mul->parsed()) {
      auto a = wm::eval_expr(w, expr1, budget);
      auto b = wm::eval_expr(w, expr2, budget);
      auto r = wm::multiply(w, a.elem, b.elem, budget);
      json j{{"cmd", "mul"}};
      j.update(elem_json(w, r.elem, a.exact && b.exact && r.exact));
      emit(j);
    } else if (cmd_inv->parsed()) {
      auto a = wm::eval_expr(w, expr1, budget);
      json j{{"cmd", "inv"}};
      j.update(elem_json(w, wm::inverse(w, a.elem), a.exact));
      emit(j);
    } else if (cmd_leq->parsed()) {
      auto a = wm::eval_expr(w, expr1, budget);
      auto b = wm::eval_expr(w, expr2, budget);
      auto verdict = wm::order_leq(w, parse_kind(kind), a.elem, b.elem);
      json j{{"cmd", "leq"},
             {"kind", kind},
             {"lhs", wm::monoid_expr(w, a.elem)},
             {"rhs", wm::monoid_expr(w, b.elem)},
             {"holds", verdict.holds},
             {"search_bound", verdict.search_bound},
             {"exact", a.exact && b.exact}};
      if (verdict.witness) j["witness"] = wm::weyl_expr(*verdict.witness);
      emit(j);
    } else if (cmd_len->parsed()) {
      auto a = wm::eval_expr(w, expr1, budget);
      emit(json{{"cmd", "len"},
                {"expr", wm::monoid_expr(w, a.elem)},
                {"lengths", lengths_json(wm::lengths(a.elem))},
                {"display", wm::lengths_display(wm::lengths(a.elem))},
                {"exact", a.exact}});
    } else if (cmd_delta->parsed()) {
      auto a = wm::eval_expr(w, expr1, budget);
      if (gen_index < 1 || gen_index > g.rank())
        wm::fail(wm::Errc::ParseError, "generator index out of range");
      if (side != "left" && side != "right")
        wm::fail(wm::Errc::ParseError, "side must be left or right");
      wm::GenSide gs = side == "right" ? wm::GenSide::Right : wm::GenSide::Left;
      json deltas;
      for (auto [kname, lk] :
           {std::pair{"pp", wm::LKind::PP}, {"mm", wm::LKind::MM},
            {"mp", wm::LKind::MP}})
        deltas[kname] = wm::length_delta(w, gs, gen_index - 1, a.elem, lk);
      emit(json{{"cmd", "delta"},
                {"side", side == "right" ? "right" : "left"},
                {"gen", gen_index},
                {"expr", wm::monoid_expr(w, a.elem)},
                {"deltas", deltas},
                {"exact", a.exact}});
    } else if (cmd_ball->parsed()) {
      auto ball = wm::monoid_ball(w, session.ball_bound);
      for (size_t i = 0; i < ball.size(); ++i) {
        json j{{"cmd", "ball"}, {"index", i}};
        j.update(elem_json(w, ball[i], true));
        emit(j);
      }
      emit(json{{"cmd", "ball"}, {"summary", true}, {"bound", session.ball_bound},
                {"size", ball.size()}});
    } else if (cmd_hasse->parsed()) {
      auto ball = wm::monoid_ball(w, session.ball_bound);
      auto kind_v = parse_kind(kind);
      auto edges = wm::covers(w, kind_v, ball);
      json nodes = json::array();
      for (const auto& m : ball) nodes.push_back(wm::nf3_display(w, m));
      json jedges = json::array();
      std::vector<std::vector<int>> covering(ball.size());
      for (auto [lo, hi] : edges) {
        jedges.push_back(json::array({lo, hi}));
        covering[static_cast<size_t>(lo)].push_back(hi);
      }
      json adjacency = json::array();  // per node: the elements covering it
      for (const auto& ups : covering) adjacency.push_back(ups);
      emit(json{{"cmd", "hasse"},
                {"kind", kind},
                {"bound", session.ball_bound},
                {"nodes", nodes},
                {"edges", jedges},
                {"covering", adjacency}});
      if (!session.out_dot.empty()) {
        std::ofstream dot(session.out_dot, std::ios::binary);
        if (!dot) wm::fail(wm::Errc::ParseError, "cannot open " + session.out_dot);
        dot << wm::hasse_dot(w, kind_v, ball);
      }
    } else if (cmd_act->parsed()) {
      auto a = wm::eval_expr(w, expr1, budget);
      wm::ConePoint p = wm::parse_point(w, point_text);
      auto r = wm::act_checked(w, a.elem, p, session.descent_cap);
      json j{{"cmd", "act"}, {"expr", wm::monoid_expr(w, a.elem)}};
      if (r) {
        json vals = json::array();
        for (const auto& q : r->values) vals.push_back(q.str());
        j["result"] = "point";
        j["values"] = vals;
      } else {
        j["result"] = "annihilated";
      }
      j["exact"] = a.exact;
      emit(j);
    } else if (cmd_selftest->parsed()) {
      return run_selftest(w, session);
    }
  } catch (const wm::Error& e) {
    emit(json{{"ok", false}, {"error", wm::errc_name(e.code())},
              {"message", e.what()}});
    return 1;
  } catch (const std::exception& e) {
    emit(json{{"ok", false}, {"error", "Internal"}, {"message", e.what()}});
    return 1;
  }
  return 0;
}
