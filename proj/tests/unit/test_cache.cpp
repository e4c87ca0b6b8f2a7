#include <string>
#include <vector>

#include "doctest.h"
#include "lakecov/cache.hpp"

using namespace lakecov;

namespace {

TableSchema one_col() { return TableSchema({{"x", ValueKind::Int}}); }

Domains one_domain() { return {{Value::of_int(0), Value::of_int(1000)}}; }

IntervalPredicate span(std::int64_t lo, std::int64_t hi) {
  IntervalPredicate iv;
  iv.dims.push_back({{Value::of_int(lo), true}, {Value::of_int(hi), true}});
  return iv;
}

CoverageSet cov(std::initializer_list<std::string> keys) { return CoverageSet(keys); }

EvictionPolicy unlimited() { return {}; }

EvictionPolicy bounded(PolicyKind kind, std::size_t capacity) {
  EvictionPolicy p;
  p.kind = kind;
  p.capacity = capacity;
  return p;
}

}  // namespace

TEST_CASE("policy names round-trip and weights are validated") {
  for (auto k : {PolicyKind::Unlimited, PolicyKind::CoverageOptimized,
                 PolicyKind::VolumeOptimized, PolicyKind::Combined})
    CHECK(policy_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(policy_kind_from_string("lru"), ParseError);
  CHECK(cache_backend_from_string("list") == CacheBackend::List);
  CHECK(cache_backend_from_string("spatial") == CacheBackend::Spatial);
  CHECK_THROWS_AS(cache_backend_from_string("tree"), ParseError);

  EvictionPolicy bad = bounded(PolicyKind::Combined, 4);
  bad.w1 = 0.8;
  bad.w2 = 0.3;
  CHECK_THROWS_AS(CoverageCache(one_col(), one_domain(), CacheBackend::List, bad, "data/"),
                  ContractError);
  bad.w1 = -0.2;
  bad.w2 = 1.2;
  CHECK_THROWS_AS(CoverageCache(one_col(), one_domain(), CacheBackend::List, bad, "data/"),
                  ContractError);
  CHECK_THROWS_AS(
      CoverageCache(one_col(), one_domain(), CacheBackend::List,
                    bounded(PolicyKind::CoverageOptimized, 0), "data/"),
      ContractError);
  // Unlimited ignores capacity entirely.
  CHECK_NOTHROW(
      CoverageCache(one_col(), one_domain(), CacheBackend::List, unlimited(), "data/"));
}

TEST_CASE("policy score normalizes and tolerates degenerate spans") {
  PolicyStats s{10.0, 110.0, 2, 12};
  CHECK(policy_score(110.0, 2, s, 0.5, 0.5) == doctest::Approx(1.0));
  CHECK(policy_score(10.0, 12, s, 0.5, 0.5) == doctest::Approx(0.0));
  CHECK(policy_score(60.0, 7, s, 0.5, 0.5) == doctest::Approx(0.5));
  // The literal form rewards big coverage instead.
  CHECK(policy_score(10.0, 12, s, 0.0, 1.0, true) == doctest::Approx(1.0));
  CHECK(policy_score(10.0, 2, s, 0.0, 1.0, true) == doctest::Approx(0.0));

  PolicyStats flat{5.0, 5.0, 3, 3};
  CHECK(policy_score(5.0, 3, flat, 0.5, 0.5) == doctest::Approx(0.0));
}

TEST_CASE("hits require containment and pick the smallest coverage") {
  MemoryStore store;
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List, unlimited(), "data/t/");
  CHECK_FALSE(cache.get_min_coverage(span(1, 2), store).has_value());

  Tick now = store.current_tick();
  cache.put(span(0, 100), cov({"data/t/a", "data/t/b", "data/t/c"}), now);
  cache.put(span(10, 60), cov({"data/t/a", "data/t/b"}), now);
  cache.put(span(40, 90), cov({"data/t/c", "data/t/d"}), now);
  CHECK(cache.live_entries() == 3);

  // [20,50] fits only [0,100] and [10,60]; the latter covers less.
  auto got = cache.get_min_coverage(span(20, 50), store);
  REQUIRE(got.has_value());
  CHECK(*got == cov({"data/t/a", "data/t/b"}));

  // [45,55] fits all three; the two 2-file candidates tie on size and the
  // lexicographically smaller key sequence wins.
  got = cache.get_min_coverage(span(45, 55), store);
  REQUIRE(got.has_value());
  CHECK(*got == cov({"data/t/a", "data/t/b"}));

  CHECK_FALSE(cache.get_min_coverage(span(0, 200), store).has_value());
  CHECK(cache.get_min_coverage(span(40, 60), store).has_value());
}

TEST_CASE("a false query is contained by everything yet stores nothing") {
  MemoryStore store;
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List, unlimited(), "data/t/");
  CHECK_THROWS_AS(cache.put(false_interval(), cov({"data/t/a"}), 0), ContractError);
  cache.put(span(5, 6), cov({"data/t/a"}), store.current_tick());
  auto got = cache.get_min_coverage(false_interval(), store);
  REQUIRE(got.has_value());
  CHECK(*got == cov({"data/t/a"}));
}

TEST_CASE("entries widen by files created after their timestamp") {
  MemoryStore store;
  store.put("data/t/a", "x");
  store.put("elsewhere/z", "x");
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List, unlimited(), "data/t/");
  cache.put(span(0, 100), cov({"data/t/a"}), store.current_tick());

  auto got = cache.get_min_coverage(span(10, 20), store);
  REQUIRE(got.has_value());
  CHECK(*got == cov({"data/t/a"}));

  store.put("data/t/b", "x");
  store.put("other/prefix", "x");
  got = cache.get_min_coverage(span(10, 20), store);
  REQUIRE(got.has_value());
  CHECK(*got == cov({"data/t/a", "data/t/b"}));

  // A younger entry for the same box beats the widened older one.
  cache.put(span(0, 100), cov({"data/t/a"}), store.current_tick());
  got = cache.get_min_coverage(span(10, 20), store);
  CHECK(*got == cov({"data/t/a"}));
}

TEST_CASE("coverage-optimized eviction drops the widest coverage") {
  MemoryStore store;
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List,
                      bounded(PolicyKind::CoverageOptimized, 2), "data/t/");
  Tick now = store.current_tick();
  cache.put(span(0, 10), cov({"data/t/a"}), now);
  cache.put(span(20, 30), cov({"data/t/a", "data/t/b", "data/t/c"}), now);
  cache.put(span(40, 50), cov({"data/t/a", "data/t/b"}), now);
  CHECK(cache.live_entries() == 2);
  CHECK_FALSE(cache.get_min_coverage(span(22, 28), store).has_value());
  CHECK(cache.get_min_coverage(span(2, 8), store).has_value());
  CHECK(cache.get_min_coverage(span(42, 48), store).has_value());
}

TEST_CASE("volume-optimized eviction drops the smallest box") {
  MemoryStore store;
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List,
                      bounded(PolicyKind::VolumeOptimized, 2), "data/t/");
  Tick now = store.current_tick();
  cache.put(span(0, 500), cov({"data/t/a"}), now);
  cache.put(span(600, 605), cov({"data/t/b"}), now);
  cache.put(span(700, 900), cov({"data/t/c"}), now);
  CHECK(cache.live_entries() == 2);
  CHECK_FALSE(cache.get_min_coverage(span(601, 604), store).has_value());
  CHECK(cache.get_min_coverage(span(100, 200), store).has_value());
  CHECK(cache.get_min_coverage(span(750, 800), store).has_value());
}

TEST_CASE("the fresh entry competes in its own eviction round") {
  MemoryStore store;
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List,
                      bounded(PolicyKind::CoverageOptimized, 1), "data/t/");
  Tick now = store.current_tick();
  cache.put(span(0, 10), cov({"data/t/a", "data/t/b", "data/t/c"}), now);
  cache.put(span(20, 30), cov({"data/t/a"}), now);
  CHECK(cache.live_entries() == 1);
  CHECK(cache.get_min_coverage(span(22, 28), store).has_value());

  // A worse newcomer is itself the victim.
  cache.put(span(40, 50), cov({"data/t/a", "data/t/b"}), now);
  CHECK(cache.live_entries() == 1);
  CHECK(cache.get_min_coverage(span(22, 28), store).has_value());
  CHECK_FALSE(cache.get_min_coverage(span(42, 48), store).has_value());
}

TEST_CASE("deletion scrubs a file from every coverage set") {
  MemoryStore store;
  for (int accelerated = 0; accelerated < 2; ++accelerated) {
    CoverageCache cache(one_col(), one_domain(), CacheBackend::List, unlimited(), "data/t/");
    cache.set_accelerated_deletes(accelerated == 1);
    Tick now = store.current_tick();
    cache.put(span(0, 100), cov({"data/t/a", "data/t/b"}), now);
    cache.put(span(10, 60), cov({"data/t/b", "data/t/c"}), now);
    cache.on_delete("data/t/b");
    auto snap = cache.snapshot();
    REQUIRE(snap.size() == 2);
    for (const auto& e : snap) CHECK_FALSE(e.coverage.contains("data/t/b"));
    cache.on_delete("data/t/nope");
    CHECK(cache.snapshot().size() == 2);
  }
}

TEST_CASE("put validates shape and kinds") {
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List, unlimited(), "data/t/");
  IntervalPredicate wide = span(0, 1);
  wide.dims.push_back({{Value::of_int(0), true}, {Value::of_int(1), true}});
  CHECK_THROWS_AS(cache.put(wide, cov({"a"}), 0), ContractError);
  IntervalPredicate wrong;
  wrong.dims.push_back({{Value::of_text("a"), true}, {Value::of_text("b"), true}});
  CHECK_THROWS_AS(cache.put(wrong, cov({"a"}), 0), TypeError);
}

TEST_CASE("make_interval uses the cache schema and domains") {
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List, unlimited(), "data/t/");
  auto iv = cache.make_interval({{Term::cmp("x", Op::Gt, Value::of_int(5))}});
  CHECK(iv.dims[0].lo.value == Value::of_int(6));
  CHECK(iv.dims[0].hi.value == Value::of_int(1000));
  CHECK(cache.make_interval({{Term::cmp("x", Op::Gt, Value::of_int(2000))}}).is_false);
}

TEST_CASE("snapshot dump is a header plus one row per entry") {
  MemoryStore store;
  CoverageCache cache(one_col(), one_domain(), CacheBackend::List, unlimited(), "data/t/");
  CHECK(cache.dump_tsv() == "interval\tcoverage\tts\n");
  cache.put(span(1, 9), cov({"data/t/a", "data/t/b"}), 3);
  std::string dump = cache.dump_tsv();
  CHECK(dump == "interval\tcoverage\tts\n[1,9]\tdata/t/a,data/t/b\t3\n");
}

TEST_CASE("spatial backend rejects float columns") {
  TableSchema schema({{"x", ValueKind::Float}});
  Domains domains{{Value::of_float(0.0), Value::of_float(1.0)}};
  CHECK_THROWS_AS(
      CoverageCache(schema, domains, CacheBackend::Spatial, unlimited(), "data/t/"),
      ContractError);
  CHECK_NOTHROW(CoverageCache(schema, domains, CacheBackend::List, unlimited(), "data/t/"));
}

TEST_CASE("spatial keeps exclusive text bounds on the side list") {
  MemoryStore store;
  TableSchema schema({{"name", ValueKind::Text}});
  Domains domains{{Value::of_text("a"), Value::of_text("zzz")}};
  CoverageCache cache(schema, domains, CacheBackend::Spatial, unlimited(), "data/t/");

  // Text keeps exclusivity, so this entry cannot live in the tree.
  auto open_box = cache.make_interval({{Term::cmp("name", Op::Gt, Value::of_text("b"))},
                                       {Term::cmp("name", Op::Lt, Value::of_text("m"))}});
  REQUIRE_FALSE(open_box.dims[0].lo.inclusive);
  cache.put(open_box, cov({"data/t/open"}), store.current_tick());

  auto closed_box = cache.make_interval({{Term::cmp("name", Op::Ge, Value::of_text("a"))},
                                         {Term::cmp("name", Op::Le, Value::of_text("p"))}});
  cache.put(closed_box, cov({"data/t/closed", "data/t/extra"}), store.current_tick());

  // A query strictly inside (b,m) matches both entries; the side entry wins
  // on size. One clamped to the open edge matches only the closed box.
  auto inner = cache.make_interval({{Term::cmp("name", Op::Ge, Value::of_text("c"))},
                                    {Term::cmp("name", Op::Le, Value::of_text("k"))}});
  auto got = cache.get_min_coverage(inner, store);
  REQUIRE(got.has_value());
  CHECK(*got == cov({"data/t/open"}));

  auto edged = cache.make_interval({{Term::cmp("name", Op::Ge, Value::of_text("b"))},
                                    {Term::cmp("name", Op::Le, Value::of_text("k"))}});
  got = cache.get_min_coverage(edged, store);
  REQUIRE(got.has_value());
  CHECK(*got == cov({"data/t/closed", "data/t/extra"}));
}

TEST_CASE("list and spatial answer a mixed run identically") {
  MemoryStore store;
  TableSchema schema({{"x", ValueKind::Int}, {"name", ValueKind::Text}});
  Domains domains{{Value::of_int(0), Value::of_int(100)},
                  {Value::of_text("a"), Value::of_text("zz")}};
  CoverageCache list(schema, domains, CacheBackend::List,
                     bounded(PolicyKind::CoverageOptimized, 8), "data/t/");
  CoverageCache spatial(schema, domains, CacheBackend::Spatial,
                        bounded(PolicyKind::CoverageOptimized, 8), "data/t/");

  auto box = [](std::int64_t lo, std::int64_t hi, const std::string& s, const std::string& t) {
    IntervalPredicate iv;
    iv.dims.push_back({{Value::of_int(lo), true}, {Value::of_int(hi), true}});
    iv.dims.push_back({{Value::of_text(s), true}, {Value::of_text(t), true}});
    return iv;
  };

  std::uint64_t state = 42;
  auto next = [&] { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
  for (int i = 0; i < 40; ++i) {
    std::int64_t a = std::int64_t(next() % 80), w = std::int64_t(next() % 20);
    char s = char('a' + next() % 10), t = char(s + next() % 5);
    auto iv = box(a, a + w, std::string(1, s), std::string(1, t));
    CoverageSet c;
    for (std::uint64_t f = next() % 4; f-- > 0;)
      c.insert("data/t/f" + std::to_string(next() % 9));
    c.insert("data/t/base");
    Tick now = store.current_tick();
    list.put(iv, c, now);
    spatial.put(iv, c, now);

    std::int64_t qa = std::int64_t(next() % 90), qw = std::int64_t(next() % 10);
    char qs = char('a' + next() % 12), qt = char(qs + next() % 3);
    auto q = box(qa, qa + qw, std::string(1, qs), std::string(1, qt));
    CHECK(list.get_min_coverage(q, store) == spatial.get_min_coverage(q, store));
  }
  CHECK(list.live_entries() == spatial.live_entries());
}
