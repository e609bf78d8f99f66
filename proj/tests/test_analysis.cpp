#include "doctest.h"

#include <set>

#include "sgp/analysis.hpp"
#include "sgp/sampling.hpp"
#include "sgp/witnesses.hpp"

using namespace sgp;

TEST_CASE("phi_ideal with the identity action is the principal right ideal") {
  auto const s = null_semigroup(2);
  auto const phi = FiniteEndoAction::identity_action(s, trivial_monoid());
  auto const ideal = phi_ideal(s, phi, 1, 0);
  CHECK(ideal.members == std::vector<int>{0, 1});  // aS^1 = {a, 0}
  CHECK(phi_ideal(s, phi, 0, 0).members == std::vector<int>{0});
}

TEST_CASE("phi_ideal with a constant-at-identity action is a singleton") {
  auto const c2 = cyclic_group(2);
  auto const phi =
      FiniteEndoAction::constant_identity_action(c2, trivial_monoid());
  auto const ideal = phi_ideal(c2, phi, 1, 0);
  CHECK(ideal.members == std::vector<int>{1});  // {a, a*1} = {a}
}

TEST_CASE("bounded phi-ideal view of W2 stays below the base index") {
  auto const phi = witnesses::w2_phi_action();
  auto const view = phi_ideal_bounded(phi, Term::aelem(3), Term::fin(0), 300);
  bool saw_lower = false;
  for (auto const& t : view.bounded_members) {
    if (t.tag == Tag::AElem) {
      CHECK(t.ints[0] <= 3);
      saw_lower = saw_lower || t.ints[0] < 3;
    }
  }
  CHECK(saw_lower);
  CHECK(view.contains(Term::aelem(3)));
  CHECK(view.contains(Term::zero()));
  CHECK(!view.contains(Term::aelem(4)));
}

TEST_CASE("phi-chains cannot exceed |S| on finite inputs") {
  auto const c2 = cyclic_group(2);
  auto const t = trivial_monoid();
  auto const phi = FiniteEndoAction::identity_action(c2, t);
  CHECK(phi_chain_search(c2, t, phi, 3) == std::nullopt);
}

TEST_CASE("finite phi-chains under surjective actions are principal chains") {
  auto const s = null_semigroup(2);
  auto const t = trivial_monoid();
  auto const phi = FiniteEndoAction::identity_action(s, t);
  auto const chain = phi_chain_search(s, t, phi, 2);
  REQUIRE(chain.has_value());
  // With phi = id the chain sets are principal right ideals of S.
  for (std::size_t i = 0; i < chain->bases.size(); ++i) {
    auto const ideal =
        phi_ideal(s, phi, static_cast<int>(chain->bases[i].ints[0]), 0);
    std::set<int> expect{static_cast<int>(chain->bases[i].ints[0])};
    for (int x = 0; x < s.order(); ++x) {
      expect.insert(s.product(static_cast<int>(chain->bases[i].ints[0]), x));
    }
    CHECK(std::set<int>(ideal.members.begin(), ideal.members.end()) == expect);
  }
}

TEST_CASE("the W2 phi-chain is found and replays") {
  auto const phi = witnesses::w2_phi_action();
  auto const chain = phi_chain_search_bounded(phi, 10, 150);
  REQUIRE(chain.has_value());
  CHECK(chain->length() == 10);
  CHECK(replay_phi_chain(phi, *chain));
  for (auto const& ev : chain->strictness) {
    CHECK(!ev.exhaustive);
    CHECK(ev.budget == 150);
  }
}

TEST_CASE("containment of phi-ideals is equivalent to membership of the base") {
  // For b in b'T: a(phi_b(S))^1 inside a'(phi_b'(S))^1 iff a is a member of
  // a'(phi_b'(S))^1; and b R b' forces phi_b(S) = phi_b'(S).
  Rng rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    auto const s = random_semigroup_up_to(rng, 4);
    auto const t = random_semigroup_up_to(rng, 4);
    auto const phi = random_endo_action(rng, s, t);
    for (int b = 0; b < t.order(); ++b) {
      for (int b2 = 0; b2 < t.order(); ++b2) {
        bool b_in_b2t = false, b2_in_bt = false;
        for (int x = 0; x < t.order(); ++x) {
          b_in_b2t = b_in_b2t || t.product(b2, x) == b;
          b2_in_bt = b2_in_bt || t.product(b, x) == b2;
        }
        if (b_in_b2t) {
          for (int a = 0; a < s.order(); ++a) {
            for (int a2 = 0; a2 < s.order(); ++a2) {
              auto const lower = phi_ideal(s, phi, a, b);
              auto const upper = phi_ideal(s, phi, a2, b2);
              CHECK(std::includes(upper.members.begin(), upper.members.end(),
                                  lower.members.begin(), lower.members.end())
                    == upper.contains(a));
            }
          }
        }
        if ((b == b2) || (b_in_b2t && b2_in_bt)) {
          std::set<int> image_b, image_b2;
          for (int x = 0; x < s.order(); ++x) {
            image_b.insert(phi.apply[b][x]);
            image_b2.insert(phi.apply[b2][x]);
          }
          CHECK(image_b == image_b2);
        }
      }
    }
  }
}

TEST_CASE("phi_ideal monotone law on finite instances") {
  Rng rng(51);
  for (int trial = 0; trial < 15; ++trial) {
    auto const s = random_semigroup_up_to(rng, 4);
    auto const t = random_semigroup_up_to(rng, 4);
    auto const phi = random_endo_action(rng, s, t);
    for (int b = 0; b < t.order(); ++b) {
      for (int b2 = 0; b2 < t.order(); ++b2) {
        bool b_in_b2t = false;
        for (int x = 0; x < t.order(); ++x) {
          b_in_b2t = b_in_b2t || t.product(b2, x) == b;
        }
        if (!b_in_b2t) continue;
        for (int a = 0; a < s.order(); ++a) {
          for (int a2 = 0; a2 < s.order(); ++a2) {
            auto const lower = phi_ideal(s, phi, a, b);
            auto const upper = phi_ideal(s, phi, a2, b2);
            if (upper.contains(a)) {
              CHECK(std::includes(upper.members.begin(), upper.members.end(),
                                  lower.members.begin(), lower.members.end()));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("sdp_verdict on finite operands holds with cross-validation") {
  auto const s = cyclic_group(2);
  auto const t = min_semilattice(2);
  auto const v = sdp_verdict(s, t, FiniteEndoAction::identity_action(s, t));
  CHECK(v.status == Status::Holds);
  CHECK(!v.evidence.empty());
}

TEST_CASE("sdp_verdict refutes the W2 example") {
  auto const phi = witnesses::w2_phi_action();
  auto const v = sdp_verdict_bounded(phi, 10, 150);
  CHECK(v.status == Status::Fails);
  CHECK(v.rationale.find("phi-chain") != std::string::npos);
  bool mentions_chain = false;
  for (auto const& e : v.evidence) {
    mentions_chain = mentions_chain || e.find("phi-chain") != std::string::npos;
  }
  CHECK(mentions_chain);
}

TEST_CASE("sdp_verdict holds via branch (1) for the free semigroup") {
  EndoAction phi;
  phi.domain = witnesses::free_semigroup_monogenic();
  phi.index = as_symbolic(cyclic_group(2));
  phi.apply = [](const Term&, const Term& s) { return s; };
  auto const v = sdp_verdict_bounded(phi, 8, 100);
  CHECK(v.status == Status::Holds);
  CHECK(v.rationale.find("branch (1)") != std::string::npos);
}

TEST_CASE("sdp_verdict holds via branch (2) for surjective actions") {
  // {x}* x| {x}* with the identity action: phi-chains are principal right
  // ideal chains, and both operands are declared R-noetherian.
  EndoAction phi;
  phi.domain = witnesses::w4();
  phi.index = witnesses::w4();
  phi.apply = [](const Term&, const Term& s) { return s; };
  auto const v = sdp_verdict_bounded(phi, 8, 60);
  CHECK(v.status == Status::Holds);
  CHECK(v.rationale.find("branch (2)") != std::string::npos);
}

TEST_CASE("sdp_verdict stays unknown without declarations or witnesses") {
  // Strip the declarations from W1 and act non-surjectively: branch (1) is
  // unavailable (W1 has local right identities), branch (2) cannot be
  // certified, and the identity-killing action admits no visible phi-chain.
  auto domain = witnesses::w1();
  domain.declared_r_noetherian.reset();
  EndoAction phi;
  phi.domain = domain;
  phi.index = as_symbolic(trivial_monoid());
  // phi_e collapses everything onto the identity x^0 (an endomorphism).
  phi.apply = [](const Term&, const Term&) { return Term::xpow(0); };
  REQUIRE(validate_endo_action_bounded(phi, 200).ok);
  auto const v = sdp_verdict_bounded(phi, 8, 60);
  CHECK(v.status == Status::Unknown);
}

TEST_CASE("surjective classification on finite operands") {
  auto const s = null_semigroup(2);
  auto const t = cyclic_group(2);
  auto const verdict =
      surj_sdp_classify(s, t, FiniteEndoAction::identity_action(s, t));
  CHECK(verdict.case_label == SurjCase::BothNoetherian);
  CHECK(verdict.verdict.status == Status::Holds);

  // Constant actions are not surjective for |S| > 1.
  auto const c2 = cyclic_group(2);
  CHECK_THROWS_AS(
      surj_sdp_classify(c2, t,
                        FiniteEndoAction::constant_identity_action(c2, t)),
      std::invalid_argument);
}

TEST_CASE("surjective classification case (2) for the free semigroup") {
  EndoAction phi;
  phi.domain = witnesses::free_semigroup_monogenic();
  phi.index = as_symbolic(cyclic_group(2));
  phi.apply = [](const Term&, const Term& s) { return s; };
  auto const verdict = surj_sdp_classify_bounded(phi, 100);
  CHECK(verdict.case_label == SurjCase::SNoethNoLri);
  CHECK(verdict.verdict.status == Status::Holds);
}

TEST_CASE("surjective classification case (3) when only T lacks LRIs") {
  EndoAction phi;
  phi.domain = witnesses::w1();  // has local right identities
  phi.index = witnesses::free_semigroup_monogenic();
  phi.apply = [](const Term&, const Term& s) { return s; };
  auto const verdict = surj_sdp_classify_bounded(phi, 100);
  CHECK(verdict.case_label == SurjCase::TNoethNoLri);
  CHECK(verdict.verdict.status == Status::Holds);
}

TEST_CASE("bounded LRI aggregation") {
  auto const w1 = witnesses::w1();
  auto const found = exists_lri_bounded(w1, 50);
  CHECK(found.verdict == Bounded3::True);
  CHECK(found.witness.has_value());

  auto const plus = witnesses::free_semigroup_monogenic();
  CHECK(exists_lri_bounded(plus, 50).verdict == Bounded3::Unknown);
  CHECK(all_have_lri_bounded(plus, 50).verdict == Bounded3::Unknown);
  // Finite universes make the aggregate exhaustive.
  CHECK(all_have_lri_bounded(as_symbolic(right_zero(3)), 50).verdict
        == Bounded3::True);
}

TEST_CASE("rees_u_ideal examples") {
  auto const sz = adjoin_zero(cyclic_group(2));
  auto const u0 = rees_u_ideal(sz, SandwichMatrix{{{*sz.zero()}}});
  CHECK(u0.members == std::vector<int>{*sz.zero()});

  auto const c2 = cyclic_group(2);
  auto const u1 = rees_u_ideal(c2, SandwichMatrix{{{0}}});
  CHECK(u1.members == std::vector<int>{0, 1});  // eS = C2

  // A right-invertible entry of a monoid puts 1 into U.
  auto const sl = min_semilattice(2);  // identity is 1
  auto const u2 = rees_u_ideal(sl, SandwichMatrix{{{1}}});
  CHECK(u2.contains(*sl.identity()));
}

TEST_CASE("u_leq examples") {
  auto const sz = adjoin_zero(cyclic_group(2));
  auto const u = rees_u_ideal(sz, SandwichMatrix{{{*sz.zero()}}});
  CHECK(u_leq(sz, u, 0, 0));
  CHECK(!u_leq(sz, u, 0, 1));  // e != g*0
  CHECK(u_leq(sz, u, *sz.zero(), 1));

  // When every element has an LRI in U, u_leq agrees with r_leq.
  auto const c2 = cyclic_group(2);
  auto const uc = rees_u_ideal(c2, SandwichMatrix{{{0}}});
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK(u_leq(c2, uc, a, b) == r_leq(c2, a, b));
    }
  }
}

TEST_CASE("rees_r_oracle_check on fixed instances") {
  auto const c2 = cyclic_group(2);
  CHECK(rees_r_oracle_check(c2, 1, 1, SandwichMatrix{{{0}}}).status
        == Status::Holds);

  auto const sz = adjoin_zero(cyclic_group(2));
  CHECK(rees_r_oracle_check(sz, 1, 1, SandwichMatrix{{{*sz.zero()}}}).status
        == Status::Holds);

  // Mixed rows: membership through a fixed row sees only that row of P, so
  // the characterization is existential over the row coordinate.
  CHECK(rees_r_oracle_check(sz, 1, 2, SandwichMatrix{{{*sz.zero()}, {0}}})
            .status
        == Status::Holds);
}

TEST_CASE("rees_r_oracle_check on seeded random instances") {
  Rng rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    auto const s = random_semigroup_up_to(rng, 4);
    int const num_i = 1 + static_cast<int>(uniform_below(rng, 2));
    int const num_j = 1 + static_cast<int>(uniform_below(rng, 2));
    SandwichMatrix p;
    p.p.assign(num_j, std::vector<int>(num_i));
    for (auto& row : p.p) {
      for (auto& e : row) {
        e = static_cast<int>(uniform_below(rng, s.order()));
      }
    }
    CHECK(rees_r_oracle_check(s, num_i, num_j, p).status == Status::Holds);
  }
}

TEST_CASE("sos search finds the W7 chain and annotates components") {
  auto const w7 = witnesses::w7();
  auto const found = sos_r_witnessed_search(
      w7, [](const Term& t) { return Term::fin(witnesses::w7_component(t)); },
      10, 200);
  REQUIRE(found.has_value());
  CHECK(found->chain.length() == 10);
  CHECK(replay_chain(w7, found->chain));
  REQUIRE(found->y_indices.size() == 10);
  int moves = 0;
  for (std::size_t i = 0; i + 1 < found->y_indices.size(); ++i) {
    if (found->y_indices[i] != found->y_indices[i + 1]) {
      ++moves;
    }
  }
  CHECK(found->y_strict_moves == moves);
}

TEST_CASE("sos search on finite strong semilattices respects the class bound") {
  StrongDecomposition d;
  d.y = min_semilattice(2);
  d.components = {cyclic_group(2), cyclic_group(2)};
  d.transitions[{1, 0}] = {0, 0};
  auto const s = strong_semilattice(d);
  auto const part = strong_semilattice_partition(d);
  CHECK(sos_r_witnessed_search(s, part, d.y, 10) == std::nullopt);
  auto const short_chain = sos_r_witnessed_search(s, part, d.y, 2);
  REQUIRE(short_chain.has_value());
  CHECK(short_chain->chain.length() == 2);
}

TEST_CASE("W6 admits no length-25 chain inside the 20-box") {
  // Every strict step strictly decreases the second coordinate, so chains
  // within the box stabilize well before 25 steps.
  auto const w6 = witnesses::w6();
  CHECK(find_ascending_chain(w6, 25, 400, ChainSearchMode::PrefixOnly)
        == std::nullopt);
  // A short chain does exist in the box: (1,2) < (2,1), say.
  auto const short_chain =
      find_ascending_chain(w6, 2, 50, ChainSearchMode::PrefixOnly);
  REQUIRE(short_chain.has_value());
  CHECK(replay_chain(w6, *short_chain));
}

TEST_CASE("som_identity_chain_check on a Clifford-style instance") {
  StrongDecomposition d;
  d.y = min_semilattice(2);
  d.components = {cyclic_group(2), cyclic_group(2)};
  d.transitions[{1, 0}] = {0, 0};
  auto const s = strong_semilattice(d);
  auto const v =
      som_identity_chain_check(s, strong_semilattice_partition(d), d.y);
  CHECK(v.status == Status::Holds);
}

TEST_CASE("som_identity_chain_check reports not-applicable cases") {
  // Components that are not monoids.
  auto const w7ish = null_semigroup(2);
  auto const v =
      som_identity_chain_check(w7ish, {0, 0}, min_semilattice(1));
  CHECK(v.status == Status::Unknown);

  // Premise 1_a 1_b = 1_{ab} can fail: left-zero {0,1} partitioned into two
  // trivial monoids over the 2-element antichain... min_semilattice(2) is a
  // chain, so use a partition whose identities multiply the wrong way.
  auto const lz = left_zero(2);
  auto const check = semilattice_partition_check(lz, {0, 1}, min_semilattice(2));
  // Left-zero: S_1 S_0 = {1} escapes S_0, so this is not even a semilattice
  // of semigroups; the checker reports it and som passes that through.
  CHECK(!check.ok);
  CHECK(som_identity_chain_check(lz, {0, 1}, min_semilattice(2)).status
        == Status::Unknown);

  // Singleton Y holds vacuously.
  auto const c2 = cyclic_group(2);
  CHECK(som_identity_chain_check(c2, {0, 0}, min_semilattice(1)).status
        == Status::Holds);
}

TEST_CASE("verdict serialization is line-oriented and complete") {
  Verdict v;
  v.status = Status::Fails;
  v.rationale = "containment breaks";
  v.evidence = {"a_1", "a_2"};
  v.budget = 200;
  CHECK(v.to_report()
        == "status fails\nbranch containment breaks\n"
           "witness a_1\nwitness a_2\nbudget 200\n");

  Verdict holds;
  holds.status = Status::Holds;
  holds.rationale = "exhaustive";
  CHECK(holds.to_report() == "status holds\nbranch exhaustive\n");
}

TEST_CASE("UIdeal right-ideal law on random instances") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    auto const s = random_semigroup_up_to(rng, 4);
    SandwichMatrix p;
    p.p = {{static_cast<int>(uniform_below(rng, s.order()))}};
    auto const u = rees_u_ideal(s, p);  // throws if US escapes U
    for (int m : u.members) {
      for (int x = 0; x < s.order(); ++x) {
        CHECK(u.contains(s.product(m, x)));
      }
    }
  }
}
