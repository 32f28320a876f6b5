#include <random>

#include "doctest.h"
#include "linkpos/diagram.hpp"

using namespace linkpos;

namespace {

BraidWord braid(int n, std::vector<int> letters) {
  BraidWord b;
  b.strands = n;
  b.letters = std::move(letters);
  return b;
}

const char* kCableClosure =
    "X[1,16,2,15] X[2,6,3,5] X[3,12,4,11] X[7,13,8,12] X[9,15,10,14] "
    "X[10,5,11,4] X[13,9,14,8] X[16,1,7,6] "
    "components: (1 2 3 4 5 6)(7 8 9 10 11 12 13 14 15 16) "
    "signs: + + + + + + + +";

}  // namespace

TEST_CASE("braid closure serializes deterministically") {
  LinkDiagram d = braid_closure(braid(4, {2, 2, 2, 1, 3, 2, 1, 3}));
  CHECK(serialize_pd(d) == kCableClosure);
}

TEST_CASE("pd text round-trips through parse and serialize") {
  for (const char* text :
       {kCableClosure,
        "X[1,4,2,3] X[4,1,3,2] components: (1 2)(3 4) signs: + +",
        " components: (1)",
        " components: (1)(2) signs:"}) {
    LinkDiagram d = parse_pd(text);
    CHECK(serialize_pd(d) == serialize_pd(parse_pd(serialize_pd(d))));
  }
}

TEST_CASE("zero-crossing diagrams keep their serialization quirk") {
  LinkDiagram d = braid_closure(braid(1, {}));
  CHECK(serialize_pd(d) == " components: (1)");
}

TEST_CASE("pd parse errors carry the right kinds") {
  auto kind_of = [](const char* text) {
    try {
      parse_pd(text);
      return ErrorKind::MissingInput;  // sentinel: no throw
    } catch (const Error& e) {
      return e.kind();
    }
  };
  CHECK(kind_of("X[1,4,2,3] X[4,1,3,2]") == ErrorKind::MalformedPD);
  // Sign derivation runs before the degree tally, so the dangling arcs need
  // an explicit sign to reach the degree check.
  CHECK(kind_of("X[1,4,2,3] components: (1 2)(3 4) signs: +") ==
        ErrorKind::ArcDegreeError);
  // Two-arc cycles orient every over-strand both ways, so derivation
  // refuses to guess.
  CHECK(kind_of("X[1,4,2,3] X[4,1,3,2] components: (1 2)(3 4)") ==
        ErrorKind::OrientationInconsistent);
  // Flipping one sign of a valid diagram contradicts the cycle successors.
  CHECK(kind_of("X[1,16,2,15] X[2,6,3,5] X[3,12,4,11] X[7,13,8,12] "
                "X[9,15,10,14] X[10,5,11,4] X[13,9,14,8] X[16,1,7,6] "
                "components: (1 2 3 4 5 6)(7 8 9 10 11 12 13 14 15 16) "
                "signs: - + + + + + + +") ==
        ErrorKind::OrientationInconsistent);
  CHECK(kind_of("X[1,4,2,3] X[4,1,3,2] components: (1 2)(3 4) junk") ==
        ErrorKind::MalformedPD);
  CHECK(kind_of("X[1,4,2,3] X[4,1,3,2] components: (1 2)(3 9)") ==
        ErrorKind::MalformedPD);
}

TEST_CASE("three-component alternating closure profile") {
  LinkDiagram d = braid_closure(braid(3, {1, -2, 1, -2, 1, -2}));
  DiagramProfile p = diagram_profile(d);
  CHECK(p.components_count == 3);
  CHECK(p.crossings_count == 6);
  CHECK(p.writhe == 0);
  CHECK(p.seifert_circles == 3);
  CHECK(p.s_plus == 2);
  CHECK(p.s_minus == 2);
  CHECK(p.flatten_circles == 1);
  CHECK(p.lk_total == 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(p.linking.entries[i][j] == 0);
  CHECK(p.is_alternating);
  CHECK(p.is_connected);
  CHECK_FALSE(p.is_positive);
}

TEST_CASE("cable closure profile counts") {
  DiagramProfile p =
      diagram_profile(braid_closure(braid(4, {2, 2, 2, 1, 3, 2, 1, 3})));
  CHECK(p.components_count == 2);
  CHECK(p.crossings_count == 8);
  CHECK(p.writhe == 8);
  CHECK(p.seifert_circles == 4);
  CHECK(p.s_plus == 1);
  CHECK(p.s_minus == 4);
  CHECK(p.flatten_circles == 1);
  CHECK(p.lk_total == 2);
  CHECK(p.is_positive);
}

TEST_CASE("component deletion matches the sub-braid closure") {
  BraidWord b = braid(4, {2, 2, 2, 1, 3, 2, 1, 3});
  LinkDiagram d = braid_closure(b);
  LinkDiagram inner = delete_components(d, {1});
  DiagramProfile pi = diagram_profile(inner);
  DiagramProfile ps = diagram_profile(braid_closure(braid(2, {1, 1, 1})));
  CHECK(pi.crossings_count == ps.crossings_count);
  CHECK(pi.writhe == ps.writhe);
  CHECK(pi.seifert_circles == ps.seifert_circles);
  CHECK(pi.components_count == 1);

  CHECK_THROWS_AS(delete_components(d, {}), Error);
  CHECK_THROWS_AS(delete_components(d, {5}), Error);
}

TEST_CASE("mirror and reversal act on signs as documented") {
  LinkDiagram hopf = braid_closure(braid(2, {1, 1}));
  DiagramProfile pm = diagram_profile(mirror_diagram(hopf));
  CHECK(pm.writhe == -2);
  CHECK(pm.lk_total == -1);

  DiagramProfile pr = diagram_profile(reverse_components(hopf, {1}));
  CHECK(pr.lk_total == -1);  // both crossings are mixed, so both flip

  // Property: mirror and reversal are involutions on the serialized diagram.
  CHECK(serialize_pd(mirror_diagram(mirror_diagram(hopf))) ==
        serialize_pd(hopf));
  CHECK(serialize_pd(reverse_components(reverse_components(hopf, {1}), {1})) ==
        serialize_pd(hopf));

  LinkDiagram t = transform_diagram(hopf, true, {1});
  DiagramProfile pt = diagram_profile(t);
  CHECK(pt.lk_total == 1);  // reversal then mirror restores the linking
}

TEST_CASE("disjoint union stacks components") {
  LinkDiagram hopf = braid_closure(braid(2, {1, 1}));
  LinkDiagram unknot = braid_closure(braid(1, {}));
  DiagramProfile p = diagram_profile(disjoint_union(hopf, unknot));
  CHECK(p.components_count == 3);
  CHECK(p.lk_total == 1);
  CHECK_FALSE(p.is_connected);
}

TEST_CASE("twist-box family diagrams are stable") {
  LinkDiagram d1 = mirror_diagram(make_rational({2, 1, 2}));
  CHECK(serialize_pd(d1) ==
        "X[2,10,3,7] X[4,9,5,8] X[6,4,1,3] X[7,1,8,2] X[9,6,10,5] "
        "components: (1 2 3 4 5 6)(7 8 9 10) signs: - + + - +");
  LinkDiagram d2 = mirror_diagram(make_rational({4, 1, 4}));
  CHECK(serialize_pd(d2) ==
        "X[2,18,3,11] X[4,16,5,17] X[6,13,7,12] X[8,15,9,14] X[10,6,1,5] "
        "X[11,1,12,2] X[13,8,14,7] X[15,10,16,9] X[17,3,18,4] "
        "components: (1 2 3 4 5 6 7 8 9 10)(11 12 13 14 15 16 17 18) "
        "signs: - - + + + - + + -");
  DiagramProfile p = diagram_profile(d1);
  CHECK(p.components_count == 2);
  CHECK(p.lk_total == 0);
  CHECK(p.is_alternating);
}

TEST_CASE("seifert analysis separates homogeneous from mixed blocks") {
  SeifertReport granny =
      seifert_analysis(braid_closure(braid(3, {1, 1, 1, 2, 2, 2})));
  CHECK(granny.is_homogeneous);
  CHECK(granny.vertices == 3);
  CHECK(granny.reduced_edges == 2);
  CHECK(granny.reduced_is_tree);
  CHECK(granny.block_count == 2);
  CHECK(granny.fibred_positive_verdict == FibredVerdict::FIBRED);

  SeifertReport eight =
      seifert_analysis(braid_closure(braid(3, {1, -2, 1, -2})));
  CHECK(eight.is_homogeneous);  // the two blocks carry one sign each
  CHECK(eight.fibred_positive_verdict == FibredVerdict::NOT_APPLICABLE);

  SeifertReport mixed =
      seifert_analysis(braid_closure(braid(2, {1, 1, -1, 1})));
  CHECK_FALSE(mixed.is_homogeneous);  // one block, both signs

  SeifertReport torus = seifert_analysis(braid_closure(braid(2, {1, 1})));
  CHECK(torus.reduced_edges == 1);
  CHECK(torus.reduced_is_tree);
  CHECK(torus.fibred_positive_verdict == FibredVerdict::FIBRED);
}

// Property: profiles are invariant under serialization round-trips.
TEST_CASE("profile survives a pd round-trip on random closures") {
  std::mt19937 rng(5417);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + static_cast<int>(rng() % 4);
    int len = 1 + static_cast<int>(rng() % 20);
    BraidWord b;
    b.strands = n;
    for (int j = 0; j < len; ++j) {
      int g = 1 + static_cast<int>(rng() % (n - 1));
      b.letters.push_back(rng() % 2 ? g : -g);
    }
    LinkDiagram d = braid_closure(b);
    LinkDiagram back = parse_pd(serialize_pd(d));
    DiagramProfile p1 = diagram_profile(d);
    DiagramProfile p2 = diagram_profile(back);
    CHECK(p1.components_count == p2.components_count);
    CHECK(p1.writhe == p2.writhe);
    CHECK(p1.seifert_circles == p2.seifert_circles);
    CHECK(p1.s_plus == p2.s_plus);
    CHECK(p1.s_minus == p2.s_minus);
    CHECK(p1.flatten_circles == p2.flatten_circles);
    CHECK(p1.linking.entries == p2.linking.entries);
  }
}
