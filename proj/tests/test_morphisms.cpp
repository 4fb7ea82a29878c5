#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "thmon/error.hpp"
#include "thmon/morphisms.hpp"

using namespace thmon;
using namespace thmon::testing;

TEST_CASE("canonicalize merges sibling groups") {
  CHECK(to_string(el("{00->10, 01->11}")) == "{0->1}");
  CHECK(to_string(el("{00->0, 01->1}")) == "{0->^}");
  CHECK(to_string(el("{00->10, 01->110}")) == "{00->10,01->110}");
  CHECK(to_string(el("{00->00, 01->01, 1->1}")) == "{^->^}");
  CHECK_THROWS_AS(parse_table("{0->1, 01->1}", plain(2)), Error);
}

TEST_CASE("canonical tables admit no merge") {
  Rng rng(1);
  for (unsigned k : {2u, 3u}) {
    for (int t = 0; t < 500; ++t) {
      Element e = random_element(rng, plain(k), 6, 3, 3);
      CHECK(no_merge_applies(e));
      CHECK(std::is_sorted(e.entries().begin(), e.entries().end(),
                           [](Entry const& a, Entry const& b) {
                             return a.dom < b.dom;
                           }));
    }
  }
}

TEST_CASE("restrict refines one entry") {
  CHECK(to_string(restrict(el("{0->1}"), 0, 1)) == "{00->10,01->11}");
  CHECK(to_string(restrict(el("{^->^}", plain(3)), 0, 1))
        == "{0->0,1->1,2->2}");
  CHECK_THROWS_AS(restrict(el("{0->1}"), 1, 1), Error);
}

TEST_CASE("canonicalize undoes restrict on a small exhaustive family") {
  for (unsigned k : {2u, 3u}) {
    auto family = tiny_family(plain(k), k == 2 ? 3 : 2, k == 2 ? 2 : 1);
    REQUIRE(family.size() > 10);
    for (auto const& e : family) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t d = 1; d <= 2; ++d) {
          Table r = restrict(e, i, d);
          CHECK(same_element(r, e));
          CHECK(canonicalize(r) == e);
        }
      }
    }
  }
}

TEST_CASE("composition examples") {
  CHECK(compose(el("{1->0}"), el("{0->1}")) == el("{0->0}"));
  CHECK(compose(el("{10->0, 11->1}"), el("{0->1}")) == el("{0->^}"));
  CHECK(is_zero(compose(zero(plain(2)), el("{0->1}"))));
  CHECK(brute_compose_matches(el("{1->0}"), el("{0->1}"), el("{0->0}")));
  CHECK(brute_compose_matches(el("{10->0, 11->1}"), el("{0->1}"),
                              el("{0->^}")));
  CHECK_THROWS_AS(compose(el("{0->1}"), el("{0->1}", plain(3))), Error);
}

TEST_CASE("composition agrees with pointwise application") {
  Rng rng(2);
  for (unsigned k : {2u, 3u}) {
    for (int t = 0; t < 400; ++t) {
      Element psi = random_element(rng, plain(k), 4, 3, 3);
      Element phi = random_element(rng, plain(k), 4, 3, 3);
      Element p   = compose(psi, phi);
      INFO(to_string(psi) << " o " << to_string(phi) << " = " << to_string(p));
      CHECK(brute_compose_matches(psi, phi, p));
    }
  }
}

TEST_CASE("composition agrees with pointwise application in headed mode") {
  Rng rng(3);
  Alphabet a{2, 2};
  for (int t = 0; t < 300; ++t) {
    Element psi = random_element(rng, a, 4, 2, 2);
    Element phi = random_element(rng, a, 4, 2, 2);
    CHECK(brute_compose_matches(psi, phi, compose(psi, phi)));
  }
}

TEST_CASE("monoid laws") {
  Rng rng(4);
  for (unsigned k : {2u, 3u}) {
    Alphabet a = plain(k);
    for (int t = 0; t < 200; ++t) {
      Element x = random_element(rng, a, 4, 3, 3);
      Element y = random_element(rng, a, 4, 3, 3);
      Element z = random_element(rng, a, 4, 3, 3);
      CHECK(compose(x, compose(y, z)) == compose(compose(x, y), z));
      CHECK(compose(identity(a), x) == x);
      CHECK(compose(x, identity(a)) == x);
      CHECK(is_zero(compose(zero(a), x)));
      CHECK(is_zero(compose(x, zero(a))));
    }
  }
}

TEST_CASE("apply") {
  CHECK(apply(el("{0->^}"), wd("01101")) == wd("1101"));
  CHECK_FALSE(apply(el("{0->1}"), wd("1")));
  CHECK(apply(el("{^->0}"), wd("^")) == wd("0"));
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    Element e = random_element(rng, plain(3), 4, 3, 3);
    for (auto const& w : words_up_to(plain(3), 3)) {
      CHECK(apply(e, w) == brute_apply(e, w));
    }
  }
}

TEST_CASE("domain and image codes") {
  Element e = el("{0->1, 1->1}");
  CHECK(domC(e) == code({"0", "1"}));
  CHECK(imC(e).size() == 1);
  CHECK(image_multiset(e).at(wd("1")) == 2);
  CHECK(domC(zero(plain(2))).empty());
  CHECK(imC(zero(plain(2))).empty());
  Table split = restrict(el("{0->0}", plain(3)), 0, 1);
  CHECK(imC(split).size() == 3);
  CHECK(imC(split).size() % 2 == 1);
  // prefix-comparable images: the image ideal is generated by 1
  Element c = el("{0->1, 1->10}");
  CHECK(imC(c) == code({"1"}));
  CHECK(image_words(c).size() == 2);
}

TEST_CASE("image code count mod k-1 survives restriction") {
  Rng rng(6);
  for (unsigned k : {3u, 4u}) {
    for (int t = 0; t < 300; ++t) {
      Element     e    = random_nonzero(rng, plain(k), 4, 2, 3);
      std::size_t base = imC(e).size() % (k - 1);
      std::size_t i    = rng() % e.size();
      Table       r    = restrict(e, i, 1 + rng() % 2);
      CHECK(imC(r).size() % (k - 1) == base);
    }
  }
}

TEST_CASE("structural predicates") {
  CHECK(is_zero(el("{}")));
  CHECK(is_identity(el("{00->00, 01->01, 1->1}")));
  CHECK(is_identity(el("{b1->b1, b2->b2}", Alphabet{3, 2})));
  CHECK(is_idempotent(el("{0->0, 1->1}", plain(3))));
  CHECK_FALSE(is_idempotent(el("{0->1}")));
  CHECK_FALSE(is_injective(el("{0->1, 1->10}")));
  CHECK_FALSE(brute_is_injective(el("{0->1, 1->10}")));
  CHECK(is_injective(el("{00->01, 01->00}")));
  CHECK_FALSE(is_injective(el("{0->1, 1->1}")));
  CHECK(is_unit(el("{0->1, 1->0}")));
  CHECK_FALSE(is_unit(el("{00->01, 01->00}")));
  CHECK(is_unit(identity(plain(2))));
}

TEST_CASE("injectivity agrees with pairwise application") {
  Rng rng(7);
  for (unsigned k : {2u, 3u}) {
    for (int t = 0; t < 400; ++t) {
      Element e = t % 2 == 0 ? random_element(rng, plain(k), 3, 2, 2)
                             : random_injective(rng, plain(k), 3, 2);
      INFO(to_string(e));
      CHECK(is_injective(e) == brute_is_injective(e));
    }
  }
}

TEST_CASE("inversion") {
  CHECK(invert(el("{0->1}")) == el("{1->0}"));
  CHECK(invert(identity(plain(2))) == identity(plain(2)));
  CHECK_THROWS_AS(invert(el("{0->1, 1->1}")), Error);
  Rng rng(8);
  for (unsigned k : {2u, 3u}) {
    for (int t = 0; t < 300; ++t) {
      Element e = random_injective(rng, plain(k), 4, 3);
      CHECK(compose(invert(e), e) == id_code(domC(e), plain(k)));
      CHECK(compose(e, invert(e)) == id_code(imC(e), plain(k)));
    }
  }
}

TEST_CASE("kernel partition") {
  auto one = kernel_partition(el("{0->1, 1->1}"));
  CHECK(one.blocks.size() == 1);
  CHECK(one.blocks[0] == wds({"0", "1"}));

  Element e = el("{0->1, 1->10}");
  auto    kp = kernel_partition(e);
  CHECK(kp.domain == code({"00", "01", "1"}));
  std::vector<std::vector<Word>> blocks = kp.blocks;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  CHECK(blocks
        == std::vector<std::vector<Word>>{wds({"1", "00"}), wds({"01"})});
  for (auto const& b : kp.blocks) {
    for (auto const& w : b) {
      CHECK(apply(e, w) == apply(e, b.front()));
    }
  }
  CHECK_THROWS_AS(kernel_partition(zero(plain(2))), Error);

  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    Element inj = random_injective(rng, plain(3), 4, 2);
    for (auto const& b : kernel_partition(inj).blocks) {
      CHECK(b.size() == 1);
    }
  }
}

TEST_CASE("headed-mode wrapping") {
  CHECK(to_string(bmode_wrap(el("{0->1}"))) == "{b1.0->b1.1}");
  CHECK(to_string(bmode_wrap(identity(plain(2)))) == "{b1->b1}");
  CHECK_THROWS_AS(bmode_unwrap(el("{b2->b1}", Alphabet{2, 2})), Error);
  Rng rng(10);
  for (int t = 0; t < 1000; ++t) {
    Element e = random_element(rng, plain(2 + t % 2), 4, 3, 3);
    CHECK(bmode_unwrap(bmode_wrap(e)) == e);
  }
}

TEST_CASE("table literal round trip") {
  Rng rng(11);
  for (Alphabet a : {plain(2), plain(3), Alphabet{3, 2}}) {
    for (int t = 0; t < 200; ++t) {
      Element e = random_element(rng, a, 5, 3, 3);
      CHECK(canonicalize(parse_table(to_string(e), a)) == e);
    }
  }
  try {
    parse_table("{0->1, 1=>0}", plain(2));
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 8);
  }
}
