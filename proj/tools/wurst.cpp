#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "wurst/homology.hpp"
#include "wurst/io.hpp"
#include "wurst/quasicat.hpp"
#include "wurst/realize.hpp"
#include "wurst/suites.hpp"

using namespace wurst;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kInputError = 2, kBudget = 3 };

SearchBudget budget_from_env() {
  SearchBudget b;
  if (const char* env = std::getenv("WURST_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      b.max_nodes = v;
    } catch (const std::exception&) {
      throw InputError(std::string("WURST_BUDGET must be a positive integer, got '") + env + "'");
    }
  }
  return b;
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) std::cout << j.dump(1) << '\n';
  else write_json_file(out, j);
}

SimplicialSet load_set(const std::string& path) { return simplicial_set_from_json(read_json_file(path)); }

// A space file may hold a simplicial set or a pointed directed object; the carrier is used.
SimplicialSet load_space(const std::string& path) {
  const auto j = read_json_file(path);
  if (j.is_object() && j.contains("carrier")) return pointed_directed_from_json(j).carrier;
  return simplicial_set_from_json(j);
}

PointedDirected load_pointed(const std::string& path) {
  const auto j = read_json_file(path);
  if (j.is_object() && j.contains("carrier")) return pointed_directed_from_json(j);
  return PointedDirected{simplicial_set_from_json(j), 0, 1};
}

struct State {
  int n = 1, k = 0, i = 1, j = 1, cap = 4, max = 3, x = 0, y = 1, upto = 3, length = 3;
  std::string out, left, right, space, cat, variant = "middle", side = "both", coeff = "Q", shape, format = "table";
  std::string a, b;
  std::function<int()> action;
};

std::vector<SuiteReport> reports;

int finish_reports(const State& s) {
  const auto text = s.format == "json" ? format_json(reports) : format_table(reports);
  if (s.out.empty()) std::cout << text;
  else {
    std::ofstream f(s.out);
    if (!f) throw InputError("cannot write '" + s.out + "'");
    f << text;
  }
  for (const auto& r : reports)
    if (!r.pass()) return kCheckFailed;
  return kPass;
}

EnrichedCategory category_or_default(const State& s) {
  if (!s.cat.empty()) return enriched_category_from_json(read_json_file(s.cat));
  return free_directed(standard_simplex(1, s.cap + 1));
}

void add_cap(CLI::App* c, State& s) { c->add_option("--cap", s.cap, "simplicial level bound")->check(CLI::NonNegativeNumber); }
void add_out(CLI::App* c, State& s) { c->add_option("--out,-o", s.out, "output file (default: stdout)"); }

// Object builders; registered under `build` and at the top level.
void register_builders(CLI::App* parent, State& s) {
  auto leaf = [&](const char* name, const char* help, std::function<int()> run) {
    auto* c = parent->add_subcommand(name, help);
    add_out(c, s);
    c->callback([&s, run] { s.action = run; });
    return c;
  };

  auto* simplex = leaf("simplex", "standard simplex Delta^n", [&s] {
    emit(to_json(standard_simplex(s.n, s.cap)), s.out);
    return kPass;
  });
  simplex->add_option("--n", s.n)->required();
  add_cap(simplex, s);

  auto* bd = leaf("boundary", "boundary of Delta^n", [&s] {
    emit(to_json(boundary(s.n, s.cap)), s.out);
    return kPass;
  });
  bd->add_option("--n", s.n)->required();
  add_cap(bd, s);

  auto* hn = leaf("horn", "horn Lambda^n_k", [&s] {
    emit(to_json(horn(s.n, s.k, s.cap)), s.out);
    return kPass;
  });
  hn->add_option("--n", s.n)->required();
  hn->add_option("--k", s.k)->required();
  add_cap(hn, s);

  auto* jn = leaf("join", "join of two simplicial sets (files) or of Delta^i and Delta^j", [&s] {
    const bool files = !s.left.empty() || !s.right.empty();
    if (files && (s.left.empty() || s.right.empty())) throw InputError("join: give both --left and --right");
    const Join jo = files ? Join(load_set(s.left), load_set(s.right))
                          : Join(standard_simplex(s.i, s.cap), standard_simplex(s.j, s.cap));
    emit(to_json(jo.set()), s.out);
    return kPass;
  });
  jn->add_option("--left", s.left);
  jn->add_option("--right", s.right);
  jn->add_option("--i", s.i);
  jn->add_option("--j", s.j);
  add_cap(jn, s);

  auto* pr = leaf("product", "product of two simplicial sets", [&s] {
    emit(to_json(product(load_set(s.left), load_set(s.right))), s.out);
    return kPass;
  });
  pr->add_option("--left", s.left)->required();
  pr->add_option("--right", s.right)->required();

  auto* su = leaf("suspension", "directed suspension of a simplicial set", [&s] {
    const auto k = load_set(s.space);
    const auto p = s.side == "left" ? suspension_left(k) : s.side == "right" ? suspension_right(k) : suspension(k);
    emit(to_json(p), s.out);
    return kPass;
  });
  su->add_option("--space", s.space)->required();
  su->add_option("--side", s.side)->check(CLI::IsMember({"both", "left", "right"}));

  auto* q = leaf("q", "the coherent cube quotient Q(i,j)", [&s] {
    emit(to_json(q_space(s.i, s.j, s.cap)), s.out);
    return kPass;
  });
  q->add_option("--i", s.i)->required();
  q->add_option("--j", s.j)->required();
  add_cap(q, s);

  auto* w = leaf("w", "the term W_n", [&s] {
    emit(to_json(w_object(s.n, s.cap).w.term(s.n)), s.out);
    return kPass;
  });
  w->add_option("--n", s.n)->required();
  add_cap(w, s);

  auto* cu = leaf("cut", "the bisimplicial set Cut^n", [&s] {
    emit(to_json(cut(s.n, BiRange::square(s.cap)).set), s.out);
    return kPass;
  });
  cu->add_option("--n", s.n)->required();
  add_cap(cu, s);

  auto* jj = leaf("j", "the directed join J(i,j)", [&s] {
    emit(to_json(directed_join(s.i, s.j, s.cap)), s.out);
    return kPass;
  });
  jj->add_option("--i", s.i)->required();
  jj->add_option("--j", s.j)->required();
  add_cap(jj, s);

  auto* ne = leaf("nerve", "homotopy coherent nerve of an enriched category", [&s] {
    auto budget = budget_from_env();
    emit(to_json(coherent_nerve(enriched_category_from_json(read_json_file(s.cat)), s.cap, budget)), s.out);
    return kPass;
  });
  ne->add_option("--cat", s.cat)->required();
  add_cap(ne, s);

  auto* ho = leaf("hom", "mapping space Hom_X(x, y)", [&s] {
    auto budget = budget_from_env();
    const auto x = load_space(s.space);
    if (s.x < 0 || s.y < 0 || static_cast<std::size_t>(s.x) >= x.size(0) || static_cast<std::size_t>(s.y) >= x.size(0))
      throw InputError("hom: --x and --y must be vertices of the space");
    emit(to_json(hom_space(x, static_cast<SimplexId>(s.x), static_cast<SimplexId>(s.y), parse_hom_variant(s.variant),
                           s.cap, budget)),
         s.out);
    return kPass;
  });
  ho->add_option("--space", s.space)->required();
  ho->add_option("--x", s.x)->required();
  ho->add_option("--y", s.y)->required();
  ho->add_option("--variant", s.variant)->check(CLI::IsMember({"left", "right", "middle"}));
  add_cap(ho, s);
}

void register_verify(CLI::App* app, State& s) {
  auto* verify = app->add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto suite = [&](const char* name, const char* help, std::function<void()> run, int max, int cap) {
    auto* c = verify->add_subcommand(name, help);
    // Defaults are applied in the callback since every suite binds the same fields.
    auto* max_opt = c->add_option("--max", s.max, "cosimplicial degree bound (default " + std::to_string(max) + ")")
                        ->check(CLI::NonNegativeNumber);
    auto* cap_opt = c->add_option("--cap", s.cap, "simplicial level bound (default " + std::to_string(cap) + ")")
                        ->check(CLI::NonNegativeNumber);
    c->add_option("--format", s.format)->check(CLI::IsMember({"table", "json"}));
    add_out(c, s);
    c->callback([&s, run, max_opt, cap_opt, max, cap] {
      if (max_opt->count() == 0) s.max = max;
      if (cap_opt->count() == 0) s.cap = cap;
      s.action = [&s, run] {
        run();
        return finish_reports(s);
      };
    });
    return c;
  };

  auto* rq = suite("reedy-q", "Q is Reedy cofibrant, with the case lists of the preimage argument",
                   [&s] { reports.push_back(suite_reedy_q({s.max, s.cap}, s.length)); }, 4, 3);
  rq->add_option("--length", s.length, "longest chain for the case lists (default 3)");
  suite("reedy-w", "W is Reedy cofibrant", [&s] { reports.push_back(suite_reedy_w({s.max, s.cap})); }, 3, 4);
  suite("pullback", "pullback squares of Q", [&s] { reports.push_back(suite_pullback({s.max, s.cap})); }, 4, 3);
  for (const char* name : {"tautological", "op-symmetry"}) {
    const bool taut = std::string(name) == "tautological";
    auto* c = suite(
        name, taut ? "tautological isomorphisms of mapping spaces" : "op symmetry of mapping spaces",
        [&s, taut] {
          auto budget = budget_from_env();
          const auto c = category_or_default(s);
          const std::string label = s.cat.empty() ? "F(D1)" : s.cat;
          reports.push_back(taut ? suite_tautological(c, s.x, s.y, s.cap, budget, label)
                                 : suite_op_symmetry(c, s.x, s.y, s.cap, budget, label));
        },
        3, 2);
    c->add_option("--cat", s.cat, "enriched category JSON (default: the free directed category on Delta^1)");
    c->add_option("--x", s.x, "source object (default 0)");
    c->add_option("--y", s.y, "target object (default 1)");
  }
  suite("sigma", "sigma and the induced map on Sing", [&s] {
    auto budget = budget_from_env();
    reports.push_back(suite_sigma({s.max, s.cap}, budget));
  }, 4, 3);
  suite("nullhomotopy", "the cone factorization through Q",
        [&s] { reports.push_back(suite_nullhomotopy({s.max, s.cap})); }, 4, 3);
  auto* pa = suite("partition", "the partition count of a directed object", [&s] {
    auto budget = budget_from_env();
    if (!s.space.empty()) {
      reports.push_back(suite_partition(load_pointed(s.space), budget, s.space));
      return;
    }
    reports.push_back(suite_partition(suspension(standard_simplex(1, s.cap)), budget, "S(D1)"));
    reports.push_back(suite_partition(suspension(boundary(1, s.cap)), budget, "S(dD1)"));
    reports.push_back(suite_partition(directed_join(1, 1, s.cap), budget, "J(1,1)"));
  }, 3, 3);
  pa->add_option("--space", s.space, "pointed directed JSON (default: a built-in corpus)");
  suite("dec-equivalence", "dec against realization over J", [&s] {
    auto budget = budget_from_env();
    reports.push_back(suite_dec_equivalence({s.max, s.cap}, budget));
  }, 2, 5);
  suite("flip", "tau and the reversal of W", [&s] { reports.push_back(suite_flip({s.max, s.cap})); }, 3, 2);
  suite("cube", "Q(n,0) against the cube", [&s] { reports.push_back(suite_cube({s.max, s.cap})); }, 3, 3);
  suite("contractibility", "reduced homology of Q, W and diag Cut",
        [&s] { reports.push_back(suite_contractibility({s.max, s.cap})); }, 4, 4);
}

void register_homology(CLI::App* app, State& s) {
  auto* c = app->add_subcommand("homology", "integral homology table (k, betti, torsion)");
  c->add_option("--space", s.space)->required();
  c->add_option("--upto", s.upto, "highest degree (default 3)")->check(CLI::NonNegativeNumber);
  c->callback([&s] {
    s.action = [&s] {
      const auto table = homology_table(normalized_chains(load_space(s.space)), s.upto);
      std::cout << "k\tbetti\ttorsion\n";
      for (std::size_t k = 0; k < table.size(); ++k) {
        std::string torsion;
        for (const auto& t : table[k].torsion) torsion += (torsion.empty() ? "" : ",") + t.str();
        std::cout << k << '\t' << table[k].betti << '\t' << (torsion.empty() ? "-" : torsion) << '\n';
      }
      return kPass;
    };
  });
}

void register_iso(CLI::App* app, State& s) {
  auto* c = app->add_subcommand("iso", "decide whether two (bi)simplicial sets are isomorphic");
  c->add_option("a", s.a)->required();
  c->add_option("b", s.b)->required();
  c->callback([&s] {
    s.action = [&s] {
      const auto ja = read_json_file(s.a), jb = read_json_file(s.b);
      const bool bi = ja.is_object() && ja.contains("range");
      if (bi != (jb.is_object() && jb.contains("range"))) throw InputError("iso: cannot compare a set with a biset");
      auto budget = budget_from_env();
      const bool same = bi ? is_isomorphic(bisimplicial_set_from_json(ja), bisimplicial_set_from_json(jb), budget).has_value()
                           : is_isomorphic(simplicial_set_from_json(ja), simplicial_set_from_json(jb), budget).has_value();
      std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
      return same ? kPass : kCheckFailed;
    };
  });
}

void register_realize(CLI::App* app, State& s) {
  auto* c = app->add_subcommand("realize", "realize a (bi)simplicial set over a coefficient object");
  c->add_option("--shape", s.shape)->required();
  c->add_option("--coeff", s.coeff)->required()->check(CLI::IsMember({"delta", "W", "Q", "QL", "QR", "J"}));
  add_cap(c, s);
  add_out(c, s);
  c->callback([&s] {
    s.action = [&s] {
      const auto j = read_json_file(s.shape);
      if (s.coeff == "Q" || s.coeff == "J") {
        const auto b = bisimplicial_set_from_json(j);
        const auto range = b.range();
        if (s.coeff == "Q") emit(to_json(realize(b, q_bicosimplicial(range, s.cap)).set), s.out);
        else emit(to_json(pointed(realize_directed(b, directed_join_bicosimplicial(range, s.cap)))), s.out);
        return kPass;
      }
      const auto shape = simplicial_set_from_json(j);
      const int cocap = std::max(shape.dimension(), 0);
      const auto x = s.coeff == "delta" ? delta_cosimplicial(cocap, s.cap)
                     : s.coeff == "W"   ? w_object(cocap, s.cap).w
                     : s.coeff == "QL"  ? q_second(cocap, s.cap)
                                        : q_first(cocap, s.cap);
      emit(to_json(realize(shape, x).set), s.out);
      return kPass;
    };
  });
}

void register_reedy(CLI::App* app, State& s) {
  auto* c = app->add_subcommand("reedy", "Reedy boundary table for a coefficient object");
  c->add_option("--coeff", s.coeff)->required()->check(CLI::IsMember({"Q", "W"}));
  c->add_option("--max-degree", s.max, "cosimplicial degree bound (default 3)")->check(CLI::NonNegativeNumber);
  c->add_option("--cap", s.cap, "simplicial level bound (default 3)")->check(CLI::NonNegativeNumber);
  c->add_option("--format", s.format)->check(CLI::IsMember({"table", "json"}));
  add_out(c, s);
  c->callback([&s] {
    s.action = [&s] {
      reports.push_back(s.coeff == "Q" ? suite_reedy_q({s.max, s.cap}, 0) : suite_reedy_w({s.max, s.cap}));
      return finish_reports(s);
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wurst: homotopy coherent nerves and their mapping spaces, checked on finite data"};
  app.require_subcommand(1);
  State s;
  auto* build = app.add_subcommand("build", "build an object and write it as JSON");
  build->require_subcommand(1);
  register_builders(build, s);
  register_builders(&app, s);
  register_verify(&app, s);
  register_homology(&app, s);
  register_iso(&app, s);
  register_realize(&app, s);
  register_reedy(&app, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return s.action ? s.action() : kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "wurst: " << e.what() << '\n';
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "wurst: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "wurst: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "wurst: " << e.what() << '\n';
    return kInputError;
  }
}
