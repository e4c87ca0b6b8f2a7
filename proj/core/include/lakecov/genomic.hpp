#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lakecov/store.hpp"

namespace lakecov {

// One observed mutation from one sample, before aggregation.
struct RawVariant {
  std::string chrom;
  std::int64_t pos = 0;
  std::string ref;
  std::string alt;
  std::string sample_id;
};

// Aggregated mutation: every sample that carries (chrom, pos, ref, alt).
struct VariantRecord {
  std::string chrom;
  std::int64_t pos = 0;
  std::string ref;
  std::string alt;
  std::vector<std::string> ids;  // sorted, deduplicated

  bool operator==(const VariantRecord&) const = default;
};

// Position buckets of width p; a region query touches only the buckets its
// endpoints span.
std::int64_t bucket_of(std::int64_t pos, std::int64_t p);

std::string variant_file_key(const std::string& chrom, std::int64_t bucket);

// Which (chrom, bucket) files exist. One manifest per reference genome;
// separate references live in separate stores.
struct GenomicManifest {
  std::int64_t p = 100000;
  std::map<std::string, std::set<std::int64_t>> buckets;  // chrom -> buckets
};

// Raw input rows: TSV chrom<TAB>pos<TAB>ref<TAB>alt<TAB>sample_id, no
// header. Malformed rows raise ParseError naming the line.
std::vector<RawVariant> parse_raw_variants(const std::string& bytes);

// Groups sample ids per (chrom, pos, ref, alt) and writes one TSV file per
// non-empty (chrom, bucket) under variants/<chrom>/<bucket>, rows sorted by
// (pos, ref, alt). Rejects malformed records by input ordinal.
GenomicManifest partition_variants(const std::vector<RawVariant>& raw, std::int64_t p,
                                   ObjectStore& store);

// Rebuilds the manifest from the store listing (no data reads).
GenomicManifest load_genomic_manifest(const ObjectStore& store, std::int64_t p);

// Existing files whose bucket intersects [floor(from/p), floor(to/p)].
std::vector<std::string> range_coverage(const GenomicManifest& manifest,
                                        const std::string& chrom, std::int64_t from,
                                        std::int64_t to);

// Reads only the range_coverage files and filters pos to [from, to].
std::vector<VariantRecord> query_range(const GenomicManifest& manifest, const std::string& chrom,
                                       std::int64_t from, std::int64_t to, ObjectStore& store);

}  // namespace lakecov
