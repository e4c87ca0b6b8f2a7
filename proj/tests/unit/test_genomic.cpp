#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lakecov/genomic.hpp"

using namespace lakecov;

namespace {

RawVariant rv(std::string chrom, std::int64_t pos, std::string ref, std::string alt,
              std::string sample) {
  return {std::move(chrom), pos, std::move(ref), std::move(alt), std::move(sample)};
}

}  // namespace

TEST_CASE("bucketing is plain integer division") {
  CHECK(bucket_of(117587750, 100000) == 1175);
  CHECK(bucket_of(99999, 100000) == 0);
  CHECK(bucket_of(100000, 100000) == 1);
  CHECK(bucket_of(1, 1) == 1);
  CHECK(bucket_of(0, 100000) == 0);
  CHECK_THROWS_AS(bucket_of(-1, 100000), ContractError);
  CHECK_THROWS_AS(bucket_of(5, 0), ContractError);
  CHECK(variant_file_key("17", 1175) == "variants/17/1175");
  CHECK(variant_file_key("X", 0) == "variants/X/0");
}

TEST_CASE("raw rows parse with per-line diagnostics") {
  auto got = parse_raw_variants("17\t117587750\tG\tA\ts1\n2\t500\tAC\tT\ts2\n");
  REQUIRE(got.size() == 2);
  CHECK(got[0].chrom == "17");
  CHECK(got[0].pos == 117587750);
  CHECK(got[0].ref == "G");
  CHECK(got[0].alt == "A");
  CHECK(got[0].sample_id == "s1");
  CHECK(got[1].ref == "AC");

  CHECK(parse_raw_variants("").empty());
  CHECK(parse_raw_variants("\n\n").empty());

  CHECK_THROWS_AS(parse_raw_variants("17\t5\tG\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("17\tabc\tG\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("23\t5\tG\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("01\t5\tG\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("0\t5\tG\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("Z\t5\tG\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("17\t0\tG\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("17\t-4\tG\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("17\t5\t\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("17\t5\tGN\tA\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("17\t5\tG\tg\ts1\n"), ParseError);
  CHECK_THROWS_AS(parse_raw_variants("17\t5\tG\tA\t\n"), ParseError);

  // The offending line number is in the message.
  try {
    parse_raw_variants("1\t5\tG\tA\ts1\nbadline\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }

  // Valid edge chromosomes.
  CHECK(parse_raw_variants("22\t5\tG\tA\ts1\n").size() == 1);
  CHECK(parse_raw_variants("X\t5\tG\tA\ts1\n").size() == 1);
  CHECK(parse_raw_variants("Y\t5\tG\tA\ts1\n").size() == 1);
  CHECK(parse_raw_variants("1\t5\tGACT\tTTTT\ts1\n").size() == 1);
}

TEST_CASE("partitioning groups samples and writes sorted bucket files") {
  MemoryStore store;
  std::vector<RawVariant> raw{
      rv("17", 117587750, "G", "A", "s3"),
      rv("17", 117587750, "G", "A", "s1"),
      rv("17", 117587750, "G", "A", "s1"),  // duplicate sample collapses
      rv("17", 117587750, "G", "T", "s2"),
      rv("17", 117500000, "C", "T", "s2"),
      rv("17", 42, "A", "C", "s9"),
      rv("2", 42, "A", "C", "s9"),
  };
  auto manifest = partition_variants(raw, 100000, store);
  CHECK(manifest.p == 100000);
  REQUIRE(manifest.buckets.size() == 2);
  CHECK(manifest.buckets.at("17") == std::set<std::int64_t>{0, 1175});
  CHECK(manifest.buckets.at("2") == std::set<std::int64_t>{0});

  CHECK(store.peek("variants/17/0") == "17\t42\tA\tC\ts9\n");
  CHECK(store.peek("variants/2/0") == "2\t42\tA\tC\ts9\n");
  // Within a bucket rows sort by (pos, ref, alt); ids merge sorted and
  // deduplicated.
  CHECK(store.peek("variants/17/1175") ==
        "17\t117500000\tC\tT\ts2\n"
        "17\t117587750\tG\tA\ts1,s3\n"
        "17\t117587750\tG\tT\ts2\n");

  CHECK_THROWS_AS(partition_variants({rv("17", -5, "G", "A", "s1")}, 100000, store),
                  ParseError);
  CHECK_THROWS_AS(partition_variants(raw, 0, store), ContractError);
}

TEST_CASE("the manifest rebuilds from the store listing without reads") {
  MemoryStore store;
  std::vector<RawVariant> raw{
      rv("17", 117587750, "G", "A", "s1"),
      rv("17", 42, "A", "C", "s9"),
      rv("X", 7, "G", "T", "s2"),
  };
  auto built = partition_variants(raw, 100000, store);
  store.reset_read_count();
  auto loaded = load_genomic_manifest(store, 100000);
  CHECK(store.read_count() == 0);
  CHECK(loaded.p == built.p);
  CHECK(loaded.buckets == built.buckets);
  CHECK_THROWS_AS(load_genomic_manifest(store, 0), ContractError);
}

TEST_CASE("a narrow range touches at most two buckets") {
  GenomicManifest m;
  m.p = 100000;
  m.buckets["17"] = {0, 1, 2, 3, 1175};

  // Width <= p never spans more than two buckets.
  auto cov = range_coverage(m, "17", 117587750, 117587750 + 99999);
  CHECK(cov == std::vector<std::string>{"variants/17/1175"});
  cov = range_coverage(m, "17", 150000, 249999);
  CHECK(cov == std::vector<std::string>{"variants/17/1", "variants/17/2"});
  cov = range_coverage(m, "17", 100000, 399999);
  CHECK(cov == std::vector<std::string>{"variants/17/1", "variants/17/2", "variants/17/3"});
  cov = range_coverage(m, "17", 0, 399999);
  CHECK(cov.size() == 4);

  // Missing buckets inside the span simply do not appear.
  cov = range_coverage(m, "17", 300000, 117600000);
  CHECK(cov == std::vector<std::string>{"variants/17/3", "variants/17/1175"});

  CHECK(range_coverage(m, "9", 1, 2).empty());
  CHECK_THROWS_AS(range_coverage(m, "17", 10, 9), ContractError);
}

TEST_CASE("range queries agree with a full scan oracle") {
  MemoryStore store;
  std::mt19937_64 rng(20260819);
  std::uniform_int_distribution<std::int64_t> pos_dist(1, 500000);
  std::uniform_int_distribution<int> base(0, 3);
  std::uniform_int_distribution<int> sample(1, 40);
  const char bases[] = "GACT";

  std::vector<RawVariant> raw;
  for (int i = 0; i < 2000; ++i) {
    std::string chrom = i % 3 == 0 ? "17" : (i % 3 == 1 ? "2" : "X");
    raw.push_back(rv(chrom, pos_dist(rng), std::string(1, bases[base(rng)]),
                     std::string(1, bases[base(rng)]),
                     "s" + std::to_string(sample(rng))));
  }
  const std::int64_t p = 50000;
  auto manifest = partition_variants(raw, p, store);

  // Oracle: aggregate in memory, then filter.
  auto oracle = [&](const std::string& chrom, std::int64_t from, std::int64_t to) {
    std::map<std::tuple<std::int64_t, std::string, std::string>, std::set<std::string>> agg;
    for (const auto& v : raw)
      if (v.chrom == chrom && v.pos >= from && v.pos <= to)
        agg[{v.pos, v.ref, v.alt}].insert(v.sample_id);
    std::vector<VariantRecord> out;
    for (const auto& [key, ids] : agg)
      out.push_back({chrom, std::get<0>(key), std::get<1>(key), std::get<2>(key),
                     std::vector<std::string>(ids.begin(), ids.end())});
    return out;
  };

  std::uniform_int_distribution<std::int64_t> width(0, p);
  for (int q = 0; q < 60; ++q) {
    std::string chrom = q % 3 == 0 ? "17" : (q % 3 == 1 ? "2" : "X");
    std::int64_t from = pos_dist(rng);
    std::int64_t to = from + width(rng);

    std::uint64_t reads0 = store.read_count();
    auto got = query_range(manifest, chrom, from, to, store);
    std::uint64_t reads = store.read_count() - reads0;
    CHECK(reads == range_coverage(manifest, chrom, from, to).size());
    CHECK(reads <= 2);

    auto want = oracle(chrom, from, to);
    REQUIRE(got.size() == want.size());
    // query_range emits bucket order then line order, which is (pos,ref,alt).
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
  }

  // A query over everything returns every aggregated record.
  auto all = query_range(manifest, "17", 1, 500000, store);
  CHECK(all == oracle("17", 1, 500000));
}
