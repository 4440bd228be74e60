#include <doctest.h>

#include "augtk/dictionary.hpp"

using namespace augtk;

TEST_CASE("ids are dense and assigned in first-seen order") {
  Dictionary d;
  CHECK(d.intern("w=the") == FeatureId{0});
  CHECK(d.intern("w=dog") == FeatureId{1});
  CHECK(d.intern("w=the") == FeatureId{0});  // idempotent
  CHECK(d.size() == 2);
  CHECK(d.name_of(FeatureId{1}) == "w=dog");
  CHECK(d.names() == std::vector<std::string>{"w=the", "w=dog"});
}

TEST_CASE("lookup never mutates") {
  Dictionary d;
  d.intern("a");
  CHECK(d.lookup("a") == FeatureId{0});
  CHECK_FALSE(d.lookup("b").has_value());
  CHECK(d.size() == 1);
}

TEST_CASE("empty names are rejected") {
  Dictionary d;
  CHECK_THROWS_AS(d.intern(""), Error);
}

TEST_CASE("freezing blocks new names but keeps old ones usable") {
  Dictionary d;
  d.intern("a");
  d.freeze();
  CHECK(d.frozen());
  CHECK(d.intern("a") == FeatureId{0});
  CHECK_THROWS_AS(d.intern("b"), Error);
  CHECK_FALSE(d.lookup("b").has_value());
}

TEST_CASE("name_of rejects out-of-range ids") {
  LabelDictionary d;
  d.intern("NN");
  CHECK_THROWS_AS(d.name_of(LabelId{5}), Error);
}

TEST_CASE("equality compares name sequences, not frozen state") {
  Dictionary a, b;
  a.intern("x");
  a.intern("y");
  b.intern("x");
  b.intern("y");
  b.freeze();
  CHECK(a == b);
  b.intern("x");  // no-op
  Dictionary c;
  c.intern("y");
  c.intern("x");
  CHECK_FALSE(a == c);  // order matters
}
