#include "xns/fixtures.hpp"

#include <functional>
#include <sstream>

#include "xns/classify.hpp"
#include "xns/cremona.hpp"
#include "xns/dimension.hpp"
#include "xns/divisor.hpp"
#include "xns/oracle.hpp"
#include "xns/orbit.hpp"

namespace xns {

namespace {

DivisorClass make(int n, std::int64_t d, std::vector<std::int64_t> m) {
  return DivisorClass(n, d, std::move(m));
}

std::vector<std::int64_t> repeat(std::int64_t value, std::size_t count) {
  return std::vector<std::int64_t>(count, value);
}

std::vector<std::int64_t> concat(std::vector<std::int64_t> a,
                                 const std::vector<std::int64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// The recurring cast of divisor classes.
const DivisorClass kQuarticThreefold =  // 4H-3E1-3E2-3E3-E4-...-E9 on X(3,9)
    make(3, 4, concat({3, 3, 3}, repeat(1, 6)));
const DivisorClass kDegreeTen =  // 10H-7E1-6E2-...-6E5-E6-...-E13 on X(3,13)
    make(3, 10, concat({7, 6, 6, 6, 6}, repeat(1, 8)));
const DivisorClass kSteepVertex =  // 5H-6E1-2E2-E3-...-E13 on X(3,13)
    make(3, 5, concat({6, 2}, repeat(1, 11)));
const DivisorClass kCubicSevenDouble =  // 3H-2E1-...-2E7 on X(4,7)
    make(4, 3, repeat(2, 7));
const DivisorClass kSporadicQuadric3 =  // 2H-E1-...-E9 on X(3,9)
    make(3, 2, repeat(1, 9));
const DivisorClass kSporadicQuadric4 =  // 2H-E1-...-E14 on X(4,14)
    make(4, 2, repeat(1, 14));
const DivisorClass kPlanarQuintic =  // 5H-3E1-3E2-E3-...-E10 on X(2,10)
    make(2, 5, concat({3, 3}, repeat(1, 8)));
const DivisorClass kPlanarSextic =  // 6H-2E1-...-2E9 on X(2,9)
    make(2, 6, repeat(2, 9));

using Check = std::function<bool(std::string&)>;

struct Fixture {
  std::string name;
  Check check;
};

template <typename T>
bool expect_eq(const T& actual, const T& expected, std::string& detail) {
  std::ostringstream out;
  out << "expected " << expected << ", got " << actual;
  detail = out.str();
  return actual == expected;
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> fixtures;
  auto add = [&](std::string name, Check check) {
    fixtures.push_back({std::move(name), std::move(check)});
  };

  add("pairing: <H,H> = n-1 on X(3,0)", [](std::string& d) {
    return expect_eq(mukai_pairing(DivisorClass::hyperplane(3, 0),
                                   DivisorClass::hyperplane(3, 0)),
                     std::int64_t(2), d);
  });
  add("pairing: quartic threefold class has self-pairing -1", [](std::string& d) {
    return expect_eq(mukai_pairing(kQuarticThreefold, kQuarticThreefold),
                     std::int64_t(-1), d);
  });
  add("pairing/adeg: degree-10 class is numerically (-1)", [](std::string& d) {
    return expect_eq(mukai_pairing(kDegreeTen, kDegreeTen), std::int64_t(-1),
                     d) &&
           expect_eq(adeg(kDegreeTen), std::int64_t(1), d);
  });
  add("pairing/adeg: 5H-6E1-2E2-... is numerically (-1)", [](std::string& d) {
    return expect_eq(mukai_pairing(kSteepVertex, kSteepVertex),
                     std::int64_t(-1), d) &&
           expect_eq(adeg(kSteepVertex), std::int64_t(1), d);
  });
  add("sporadic: 2H-E1-...-E9 has self-pairing -1 and adeg -1",
      [](std::string& d) {
        return expect_eq(mukai_pairing(kSporadicQuadric3, kSporadicQuadric3),
                         std::int64_t(-1), d) &&
               expect_eq(adeg(kSporadicQuadric3), std::int64_t(-1), d);
      });
  add("sporadic: 2H-E1-...-E14 has self-pairing -2 and adeg -4",
      [](std::string& d) {
        return expect_eq(mukai_pairing(kSporadicQuadric4, kSporadicQuadric4),
                         std::int64_t(-2), d) &&
               expect_eq(adeg(kSporadicQuadric4), std::int64_t(-4), d);
      });
  add("chi: 3H-2(E1..E7) on X(4,7) has chi 0", [](std::string& d) {
    return expect_eq(chi(kCubicSevenDouble), std::int64_t(0), d);
  });
  add("chi: 2H-(E1..E9) on X(3,9) has chi 1", [](std::string& d) {
    return expect_eq(chi(kSporadicQuadric3), std::int64_t(1), d);
  });
  add("chi: 2H-(E1..E14) on X(4,14) has chi 1", [](std::string& d) {
    return expect_eq(chi(kSporadicQuadric4), std::int64_t(1), d);
  });
  add("chi: 3H-2E1-2E2-2E3-(E4..E9) on X(3,9) has chi 2", [](std::string& d) {
    return expect_eq(chi(make(3, 3, concat({2, 2, 2}, repeat(1, 6)))),
                     std::int64_t(2), d);
  });
  add("planar: 5H-3E1-3E2-(E3..E10) passes all four (-1) curve conditions",
      [](std::string& d) {
        return expect_eq(planar_conditions(kPlanarQuintic).all(), true, d);
      });
  add("planar: the nine-double-point sextic fails pairing, genus and adeg",
      [](std::string& d) {
        PlanarConditions c = planar_conditions(kPlanarSextic);
        return expect_eq(c.self_pairing_minus_one, false, d) &&
               expect_eq(c.rational, false, d) &&
               expect_eq(c.adeg_one, false, d) &&
               expect_eq(c.chi_one, true, d);
      });
  add("cremona: Cr_{3,4,5,6,7} E3 = H-E4-E5-E6-E7 on X(4,7)",
      [](std::string& d) {
        DivisorClass image = cremona_apply(
            DivisorClass::exceptional(4, 7, 3), IndexSet{3, 4, 5, 6, 7});
        return expect_eq(image, make(4, 1, {0, 0, 0, 1, 1, 1, 1}), d);
      });
  add("reflection: T_s H = 2H-E1-E2-E3 on X(2,3)", [](std::string& d) {
    return expect_eq(simple_reflection(DivisorClass::hyperplane(2, 3), 3),
                     make(2, 2, {1, 1, 1}), d);
  });
  add("word: Cr_I1 Cr_I2 Cr_I3 E3 = 3H-2(E1..E7) on X(4,7)",
      [](std::string& d) {
        WeylWord w{{IndexSet{1, 2, 3, 4, 5}, IndexSet{1, 2, 3, 6, 7},
                    IndexSet{3, 4, 5, 6, 7}}};
        return expect_eq(apply_word(DivisorClass::exceptional(4, 7, 3), w),
                         kCubicSevenDouble, d);
      });
  add("noether: 5H-6E1-2E2-... admits no reducing index set",
      [](std::string& d) {
        return expect_eq(noether_indices(kSteepVertex).has_value(), false, d);
      });
  add("numeric: degree-10 class satisfies the numeric conditions",
      [](std::string& d) {
        return expect_eq(numeric_minus_one(kDegreeTen), true, d);
      });
  add("numeric: sporadic quadric fails the numeric conditions",
      [](std::string& d) {
        return expect_eq(numeric_minus_one(kSporadicQuadric3), false, d);
      });
  add("numeric: exceptional divisors satisfy the numeric conditions",
      [](std::string& d) {
        return expect_eq(numeric_minus_one(DivisorClass::exceptional(2, 5, 3)),
                         true, d) &&
               expect_eq(numeric_minus_one(DivisorClass::exceptional(4, 9, 1)),
                         true, d);
      });
  add("classify: 3H-2(E1..E7) accepted with a three-step witness",
      [](std::string& d) {
        ClassificationResult res = classify_minus_one(kCubicSevenDouble);
        if (!expect_eq(res.verdict == Verdict::MinusOneClass, true, d))
          return false;
        if (!expect_eq(int(res.witness->steps.size()), 3, d)) return false;
        if (!expect_eq(res.terminal->degree(), std::int64_t(0), d))
          return false;
        return expect_eq(apply_word(*res.terminal, *res.witness),
                         kCubicSevenDouble, d);
      });
  add("classify: 5H-6E1-... rejected, multiplicity exceeds degree",
      [](std::string& d) {
        ClassificationResult res = classify_minus_one(kSteepVertex);
        return expect_eq(std::string(to_string(res.verdict)),
                         std::string("MultiplicityExceedsDegree"), d) &&
               expect_eq(res.steps, 0, d);
      });
  add("classify: degree-10 class rejected after one reduction step",
      [](std::string& d) {
        ClassificationResult res = classify_minus_one(kDegreeTen);
        return expect_eq(std::string(to_string(res.verdict)),
                         std::string("MultiplicityExceedsDegree"), d) &&
               expect_eq(res.steps, 1, d);
      });
  add("classify: sporadic quadrics rejected as not numerical",
      [](std::string& d) {
        return expect_eq(
                   std::string(to_string(
                       classify_minus_one(kSporadicQuadric3).verdict)),
                   std::string("NotNumerical"), d) &&
               expect_eq(
                   std::string(to_string(
                       classify_minus_one(kSporadicQuadric4).verdict)),
                   std::string("NotNumerical"), d);
      });
  add("obstruction: quartic threefold class meets H-E1-E2-E3 in -1",
      [](std::string& d) {
        auto obs = pairing_obstruction(kQuarticThreefold, 4);
        if (!expect_eq(obs.has_value(), true, d)) return false;
        return expect_eq(obs->obstructor,
                         make(3, 1, concat({1, 1, 1}, repeat(0, 6))), d) &&
               expect_eq(obs->pairing, std::int64_t(-1), d);
      });
  add("obstruction: planar quintic meets H-E1-E2 in -1", [](std::string& d) {
    auto obs = pairing_obstruction(kPlanarQuintic, 5);
    if (!expect_eq(obs.has_value(), true, d)) return false;
    return expect_eq(obs->obstructor,
                     make(2, 1, concat({1, 1}, repeat(0, 8))), d) &&
           expect_eq(obs->pairing, std::int64_t(-1), d);
  });
  add("peel: quartic threefold class sheds one hyperplane", [](std::string& d) {
    PeelResult peel = base_locus_peel(kQuarticThreefold, 4);
    if (!expect_eq(peel.components.size(), std::size_t(1), d)) return false;
    return expect_eq(peel.components[0].second, std::int64_t(1), d) &&
           expect_eq(peel.residual,
                     make(3, 3, concat({2, 2, 2}, repeat(1, 6))), d);
  });
  add("peel: planar quintic sheds the line through its triple points",
      [](std::string& d) {
        PeelResult peel = base_locus_peel(kPlanarQuintic, 5);
        if (peel.components.empty()) {
          d = "no components peeled";
          return false;
        }
        return expect_eq(peel.components[0].first,
                         make(2, 1, concat({1, 1}, repeat(0, 8))), d) &&
               expect_eq(peel.components[0].second, std::int64_t(1), d) &&
               expect_eq(base_locus_peel(kPlanarQuintic, 5, 1).residual,
                         make(2, 4, concat({2, 2}, repeat(1, 8))), d);
      });
  add("orbit: X(2,6) has 27 classes up to degree 2", [](std::string& d) {
    return expect_eq(enumerate_orbit(2, 6, 2).total(), std::int64_t(27), d);
  });
  add("orbit: X(4,7) census contains 3H-2(E1..E7)", [](std::string& d) {
    return expect_eq(
        enumerate_orbit(4, 7, 3).contains(canonical_form(kCubicSevenDouble)),
        true, d);
  });
  add("verify: census rejects an injected sporadic quadric",
      [](std::string& d) {
        OrbitTable table = enumerate_orbit(3, 9, 2);
        table.entries.push_back({canonical_form(kSporadicQuadric3),
                                 permutation_count(kSporadicQuadric3.mults())});
        return expect_eq(verify_table(table), false, d);
      });
  add("verify: census rejects an injected 5H-6E1-...", [](std::string& d) {
    OrbitTable table = enumerate_orbit(3, 13, 2);
    table.entries.push_back({canonical_form(kSteepVertex),
                             permutation_count(kSteepVertex.mults())});
    return expect_eq(verify_table(table), false, d);
  });
  add("pairing: double sporadic quadrics against their halves",
      [](std::string& d) {
        DivisorClass f1 = 2 * kSporadicQuadric3;
        DivisorClass f2 = 2 * kSporadicQuadric4;
        return expect_eq(mukai_pairing(f1, kSporadicQuadric3),
                         std::int64_t(-2), d) &&
               expect_eq(mukai_pairing(f2, kSporadicQuadric4),
                         std::int64_t(-4), d) &&
               expect_eq(chi(f1), std::int64_t(-1), d) &&  // 35 - 9*4
               expect_eq(chi(f2), std::int64_t(0), d);     // 70 - 14*5
      });
  add("oracle: one cubic with seven double points on X(4,7)",
      [](std::string& d) {
        return expect_eq(h0_dimension(kCubicSevenDouble).h0, std::int64_t(1),
                         d);
      });
  add("oracle: one quartic with nine double points on X(3,9)",
      [](std::string& d) {
        return expect_eq(h0_dimension(make(3, 4, repeat(2, 9))).h0,
                         std::int64_t(1), d);
      });
  add("oracle: one quartic with fourteen double points on X(4,14)",
      [](std::string& d) {
        return expect_eq(h0_dimension(make(4, 4, repeat(2, 14))).h0,
                         std::int64_t(1), d);
      });
  add("oracle: one conic through five points", [](std::string& d) {
    return expect_eq(h0_dimension(make(2, 2, repeat(1, 5))).h0,
                     std::int64_t(1), d);
  });
  add("oracle: Cremona preserves the section count on X(4,7)",
      [](std::string& d) {
        return expect_eq(
            cremona_h0_check(kCubicSevenDouble, IndexSet{1, 2, 3, 4, 5}), true,
            d);
      });
  add("expdim: homogeneous sextic with nine double points counts 1",
      [](std::string& d) {
        return expect_eq(ghh_expected_dim(kPlanarSextic, 6), std::int64_t(1),
                         d);
      });

  return fixtures;
}

}  // namespace

std::vector<FixtureResult> run_fixtures() {
  std::vector<FixtureResult> results;
  for (const Fixture& fixture : build_fixtures()) {
    FixtureResult result;
    result.name = fixture.name;
    std::string detail;
    try {
      result.passed = fixture.check(detail);
      result.detail = result.passed ? "" : detail;
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace xns
