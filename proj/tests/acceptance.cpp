// Acceptance suite: one PASS/FAIL line per criterion, each within its own
// time budget. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "support.hpp"

using namespace dpo;
namespace t = dpo::testing;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  [[nodiscard]] bool ok() const { return cases > 0 && passed == cases; }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

bool run(const Criterion& c) {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(tally);
  } catch (const std::exception& e) {
    tally.record(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < c.limit_seconds;
  const bool pass = tally.ok() && in_time;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", elapsed, c.limit_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << "  " << c.name << "  " << tally.passed << '/'
            << tally.cases << "  " << timing;
  if (!in_time) std::cout << "  over time";
  if (!tally.first_failure.empty()) std::cout << "  first failure: " << tally.first_failure;
  std::cout << std::endl;
  return pass;
}

Square gluing_square_of(gen::Rng& rng, std::size_t k_nodes, std::size_t k_edges, std::size_t extra) {
  const Graph k = gen::random_graph(rng, {0, k_nodes, k_edges});
  const Morphism b = gen::random_embedding(rng, k, extra, extra);
  const Morphism d = gen::random_embedding(rng, k, extra, extra);
  return gluing_square(b, d, gluing(b, d));
}

Square pullback_square_of(gen::Rng& rng) {
  const Graph d = gen::random_graph(rng, {1, 4, 5});
  const Morphism f = gen::random_morphism_into(rng, d, 4, 4);
  const Morphism g = gen::random_morphism_into(rng, d, 4, 4);
  return pullback_square(f, g, pullback_construct(f, g));
}

void composition(Tally& tally) {
  gen::Rng rng(1001);
  for (int i = 0; i < 500; ++i) {
    const Graph h = gen::random_graph(rng, {1, 6, 8});
    const Morphism f = gen::random_morphism_into(rng, h, 6, 8);
    const Morphism g = gen::random_morphism_from(rng, h, 0, 0);
    const Morphism gf = compose(g, f);
    tally.record(validate_morphism(gf).ok() && t::morphism_axioms_hold(gf), "composite " + std::to_string(i));
  }
}

void gluing_correctness(Tally& tally) {
  gen::Rng rng(1002);
  for (int i = 0; i < 300; ++i) {
    const Graph k = gen::random_graph(rng, {0, 3, 3});
    const Morphism b = gen::random_embedding(rng, k, 3, 3);
    const Morphism d = gen::random_embedding(rng, k, 3, 3);
    const GluingResult res = gluing(b, d);
    const Square sq = gluing_square(b, d, res);
    const bool ok = validate_graph(res.H).ok() && commutes(sq) && reduced_chain_condition(sq) &&
                    jointly_surjective(res.h, res.c) && is_pushout_injective(sq) && is_pullback(sq) &&
                    is_inclusion(res.c) && is_injective(res.h);
    tally.record(ok, "span " + std::to_string(i));
  }
}

void pullback_correctness(Tally& tally) {
  gen::Rng rng(1003);
  for (int i = 0; i < 300; ++i) {
    const Graph d = gen::random_graph(rng, {1, 5, 6});
    const Morphism f = gen::random_morphism_into(rng, d, 5, 5);
    const Morphism g = gen::random_morphism_into(rng, d, 5, 5);
    const PullbackResult p = pullback_construct(f, g);
    const Square sq = pullback_square(f, g, p);
    const auto [nodes, edges] = t::count_agreeing_pairs(f, g);
    const bool ok = is_pullback(sq) && reduced_chain_condition(sq) && p.A.node_count() == nodes &&
                    p.A.edge_count() == edges;
    tally.record(ok, "cospan " + std::to_string(i));
  }
}

void composition_decomposition(Tally& tally) {
  gen::Rng rng(1004);
  for (int i = 0; i < 100; ++i) {
    const Square sq1 = gluing_square_of(rng, 3, 3, 2);
    const Morphism e = gen::random_embedding(rng, sq1.bd.source, 2, 2);
    const Square sq2 = gluing_square(e, sq1.bd, gluing(e, sq1.bd));
    const Square outer = compose_squares_horizontal(sq1, sq2);
    const bool left = is_pushout_injective(sq1).verdict;
    const bool right = is_pushout_injective(sq2).verdict;
    const bool whole = is_pushout_injective(outer).verdict;
    // composition: both inner give the outer; decomposition: left and outer give the right
    const bool composed = left && right && whole;
    const bool decomposed = !(left && whole) || right;
    tally.record(composed && decomposed, "pushout pair " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const Square sq2 = pullback_square_of(rng);
    const Morphism e = gen::random_morphism_into(rng, sq2.ac.target, 3, 3);
    const Square sq1 = pullback_square(sq2.ac, e, pullback_construct(sq2.ac, e));
    const Square outer = compose_squares_horizontal(sq1, sq2);
    const bool left = is_pullback(sq1).verdict;
    const bool right = is_pullback(sq2).verdict;
    const bool whole = is_pullback(outer).verdict;
    // decomposition: right and outer give the left
    const bool composed = left && right && whole;
    const bool decomposed = !(right && whole) || left;
    tally.record(composed && decomposed, "pullback pair " + std::to_string(i));
  }
}

void special_pullbacks(Tally& tally) {
  gen::Rng rng(1005);
  for (int i = 0; i < 100; ++i) {
    const Graph g = gen::random_graph(rng, {0, 5, 6});
    const Morphism m = gen::random_embedding(rng, g, 3, 3);
    tally.record(is_injective(m) && is_pullback(special_square(m)), "m " + std::to_string(i));
  }
}

void preservation(Tally& tally) {
  gen::Rng rng(1006);
  std::size_t surjective = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph k = gen::random_graph(rng, {0, 3, 3});
    // a third of the squares get a bijective top leg so the surjective premise holds
    const Morphism b = i % 3 == 0 ? gen::random_isomorphism(rng, k) : gen::random_embedding(rng, k, 2, 2);
    const Morphism d = gen::random_embedding(rng, k, 3, 3);
    for (const Square& sq : {gluing_square(b, d, gluing(b, d)), transpose(gluing_square(b, d, gluing(b, d)))}) {
      if (!is_pushout_injective(sq)) {
        tally.record(false, "square " + std::to_string(i) + " not a pushout");
        continue;
      }
      if (is_surjective(sq.ab)) {
        ++surjective;
        tally.record(is_surjective(sq.cd), "surjective " + std::to_string(i));
      }
      if (is_injective(sq.ab)) tally.record(is_injective(sq.cd), "injective " + std::to_string(i));
    }
  }
  tally.record(surjective >= 100, "too few surjective premises: " + std::to_string(surjective));
}

void derivation_uniqueness(Tally& tally) {
  gen::Rng rng(1007);
  for (int i = 0; i < 200; ++i) {
    const DirectDerivation d = gen::random_derivation(rng, {0, 6, 7});
    const DirectDerivation again = apply(d.rule, d.match, ApplyOptions{1000u + static_cast<std::uint32_t>(i)});
    tally.record(d.G().node_count() <= 6 && derivations_isomorphic(d, again), "instance " + std::to_string(i));
  }
}

void complement_uniqueness(Tally& tally) {
  gen::Rng rng(1008);
  std::size_t instances = 0;
  for (int attempt = 0; attempt < 20000 && instances < 200; ++attempt) {
    const Rule rule = gen::random_rule(rng, {3, 2, 1, 1});
    const Graph g = gen::random_graph(rng, {0, 4, 5});
    auto m = gen::random_applicable_match(rng, rule, g);
    if (!m) continue;
    ++instances;
    const DeletionResult del = deletion(rule.b, *m);
    const auto passing = t::passing_complements(rule.b, *m);
    bool ok = !passing.empty();
    for (std::size_t a = 0; a < passing.size() && ok; ++a) {
      ok = is_isomorphic(passing[a], del.D).has_value();
      for (std::size_t b = a + 1; b < passing.size() && ok; ++b) ok = is_isomorphic(passing[a], passing[b]).has_value();
    }
    tally.record(ok, "instance " + std::to_string(instances));
  }
  tally.record(instances == 200, "only " + std::to_string(instances) + " instances drawn");
}

void church_rosser(Tally& tally) {
  gen::Rng rng(1009);
  for (int i = 0; i < 100; ++i) {
    auto pair = gen::random_parallel_pair(rng, {1, 6, 6}, {}, true);
    if (!pair) {
      tally.record(false, "no independent pair drawn");
      continue;
    }
    const CommutationResult res = commute(*pair);
    const auto w = parallel_independent(*pair);
    const SquareChecks checks = verify_commutation_squares(*pair, *w, res);
    const bool ok = is_isomorphic(res.e1.H(), res.e2.H()) && sequential_independent(pair->d1, res.e1) &&
                    sequential_independent(pair->d2, res.e2) && checks.all_pass();
    tally.record(ok, "pair " + std::to_string(i) + (checks.all_pass() ? "" : " square " + *checks.summary().failed_clause));
  }
}

void universal_probe(Tally& tally) {
  gen::Rng rng(1010);
  const auto family = t::probe_family();
  for (int i = 0; i < 50; ++i) {
    const Square sq = gluing_square_of(rng, 3, 3, 3);
    std::size_t cospans = 0;
    bool unique = true;
    for (const auto& x : family) {
      const auto r = t::universal_property_probe(sq, x);
      cospans += r.cospans;
      unique = unique && r.unique_everywhere;
    }
    tally.record(unique && cospans > 0, "square " + std::to_string(i));
  }
}

void oracle_agreement(Tally& tally) {
  const auto corpus = t::iso_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const bool fast = is_isomorphic(corpus[i], corpus[j]).has_value();
      tally.record(fast == t::brute_force_isomorphic(corpus[i], corpus[j]),
                   "graphs " + std::to_string(i) + ", " + std::to_string(j));
    }
  }
  gen::Rng rng(1011);
  std::size_t pairs = 0;
  for (int attempt = 0; attempt < 1000 && pairs < 100; ++attempt) {
    auto pair = gen::random_parallel_pair(rng, {1, 5, 5}, {}, attempt % 2 == 0);
    if (!pair) continue;
    ++pairs;
    tally.record(parallel_independent(*pair).has_value() == t::exhaustive_parallel_witness(*pair),
                 "pair " + std::to_string(pairs));
  }
  tally.record(pairs == 100, "only " + std::to_string(pairs) + " pairs drawn");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "morphism composition", 5, composition},
      {2, "gluing correctness", 10, gluing_correctness},
      {3, "pullback construction", 10, pullback_correctness},
      {4, "square composition and decomposition", 10, composition_decomposition},
      {5, "special pullbacks", 2, special_pullbacks},
      {6, "preservation of injectivity and surjectivity", 5, preservation},
      {7, "uniqueness of direct derivations", 10, derivation_uniqueness},
      {8, "pushout complement uniqueness", 60, complement_uniqueness},
      {9, "Church-Rosser diamond", 30, church_rosser},
      {10, "bounded universal property probe", 60, universal_probe},
      {11, "oracle agreement", 30, oracle_agreement},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += !run(c);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
