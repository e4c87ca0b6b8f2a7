#include "lakecov/genomic.hpp"

#include <algorithm>
#include <charconv>

#include "lakecov/tsv.hpp"

namespace lakecov {

namespace {

bool valid_chrom(const std::string& c) {
  if (c == "X" || c == "Y") return true;
  if (c.empty() || c.size() > 2 || c.front() == '0') return false;
  for (char ch : c)
    if (ch < '0' || ch > '9') return false;
  return std::stoi(c) <= 22;
}

bool valid_bases(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch != 'G' && ch != 'A' && ch != 'C' && ch != 'T') return false;
  return true;
}

// Empty on success, otherwise what is wrong; shared by the parser and the
// partitioner so both reject the same records.
std::string raw_variant_problem(const RawVariant& v) {
  if (!valid_chrom(v.chrom)) return "chromosome must be 1..22, X or Y";
  if (v.pos <= 0) return "position must be positive";
  if (!valid_bases(v.ref)) return "ref must be non-empty over GACT";
  if (!valid_bases(v.alt)) return "alt must be non-empty over GACT";
  if (v.sample_id.empty()) return "empty sample id";
  return "";
}

std::int64_t parse_pos(std::string_view field) {
  std::int64_t pos = 0;
  auto r = std::from_chars(field.data(), field.data() + field.size(), pos);
  if (r.ec != std::errc{} || r.ptr != field.data() + field.size())
    throw ParseError("bad position: " + std::string(field));
  return pos;
}

}  // namespace

std::int64_t bucket_of(std::int64_t pos, std::int64_t p) {
  if (pos < 0) throw ContractError("negative position");
  if (p < 1) throw ContractError("bucket width must be at least 1");
  return pos / p;
}

std::string variant_file_key(const std::string& chrom, std::int64_t bucket) {
  return "variants/" + chrom + "/" + std::to_string(bucket);
}

std::vector<RawVariant> parse_raw_variants(const std::string& bytes) {
  std::vector<RawVariant> out;
  for_each_tsv_row(bytes, [&](std::size_t lineno, const std::vector<std::string_view>& fields) {
    if (fields.size() != 5)
      throw ParseError("line " + std::to_string(lineno) + ": expected 5 fields, got " +
                       std::to_string(fields.size()));
    RawVariant v;
    v.chrom = std::string(fields[0]);
    try {
      v.pos = parse_pos(fields[1]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    v.ref = std::string(fields[2]);
    v.alt = std::string(fields[3]);
    v.sample_id = std::string(fields[4]);
    std::string problem = raw_variant_problem(v);
    if (!problem.empty()) throw ParseError("line " + std::to_string(lineno) + ": " + problem);
    out.push_back(std::move(v));
  });
  return out;
}

GenomicManifest partition_variants(const std::vector<RawVariant>& raw, std::int64_t p,
                                   ObjectStore& store) {
  if (p < 1) throw ContractError("bucket width must be at least 1");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string problem = raw_variant_problem(raw[i]);
    if (!problem.empty()) throw ParseError("line " + std::to_string(i + 1) + ": " + problem);
  }
  // (chrom, bucket) -> (pos, ref, alt) -> sample ids
  std::map<std::pair<std::string, std::int64_t>,
           std::map<std::tuple<std::int64_t, std::string, std::string>, std::set<std::string>>>
      grouped;
  for (const auto& v : raw)
    grouped[{v.chrom, bucket_of(v.pos, p)}][{v.pos, v.ref, v.alt}].insert(v.sample_id);
  GenomicManifest manifest;
  manifest.p = p;
  for (const auto& [where, variants] : grouped) {
    std::string body;
    for (const auto& [key, ids] : variants) {
      body += where.first;
      body += '\t';
      body += std::to_string(std::get<0>(key));
      body += '\t';
      body += std::get<1>(key);
      body += '\t';
      body += std::get<2>(key);
      body += '\t';
      bool first = true;
      for (const auto& id : ids) {
        if (!first) body += ',';
        body += id;
        first = false;
      }
      body += '\n';
    }
    store.put(variant_file_key(where.first, where.second), std::move(body));
    manifest.buckets[where.first].insert(where.second);
  }
  return manifest;
}

GenomicManifest load_genomic_manifest(const ObjectStore& store, std::int64_t p) {
  if (p < 1) throw ContractError("bucket width must be at least 1");
  GenomicManifest manifest;
  manifest.p = p;
  for (const auto& key : store.list("variants/")) {
    std::size_t a = key.find('/');
    std::size_t b = key.find('/', a + 1);
    if (b == std::string::npos || key.find('/', b + 1) != std::string::npos)
      throw ParseError("unexpected variant key shape: " + key);
    std::string chrom = key.substr(a + 1, b - a - 1);
    std::int64_t bucket = 0;
    std::string num = key.substr(b + 1);
    auto r = std::from_chars(num.data(), num.data() + num.size(), bucket);
    if (r.ec != std::errc{} || r.ptr != num.data() + num.size() || bucket < 0)
      throw ParseError("bad bucket in key: " + key);
    manifest.buckets[chrom].insert(bucket);
  }
  return manifest;
}

std::vector<std::string> range_coverage(const GenomicManifest& manifest, const std::string& chrom,
                                        std::int64_t from, std::int64_t to) {
  if (from > to) throw ContractError("range start is past its end");
  std::vector<std::string> out;
  auto it = manifest.buckets.find(chrom);
  if (it == manifest.buckets.end()) return out;
  std::int64_t lo = bucket_of(from, manifest.p);
  std::int64_t hi = bucket_of(to, manifest.p);
  for (auto b = it->second.lower_bound(lo); b != it->second.end() && *b <= hi; ++b)
    out.push_back(variant_file_key(chrom, *b));
  return out;
}

std::vector<VariantRecord> query_range(const GenomicManifest& manifest, const std::string& chrom,
                                       std::int64_t from, std::int64_t to, ObjectStore& store) {
  std::vector<VariantRecord> out;
  for (const auto& key : range_coverage(manifest, chrom, from, to)) {
    std::string bytes = store.get(key);
    for_each_tsv_row(bytes, [&](std::size_t lineno, const std::vector<std::string_view>& fields) {
      if (fields.size() != 5)
        throw ParseError(key + " line " + std::to_string(lineno) + ": expected 5 fields");
      VariantRecord rec;
      rec.chrom = std::string(fields[0]);
      rec.pos = parse_pos(fields[1]);
      rec.ref = std::string(fields[2]);
      rec.alt = std::string(fields[3]);
      std::string_view ids = fields[4];
      while (!ids.empty()) {
        std::size_t comma = ids.find(',');
        rec.ids.push_back(std::string(ids.substr(0, comma)));
        ids = comma == std::string_view::npos ? std::string_view{} : ids.substr(comma + 1);
      }
      if (rec.pos >= from && rec.pos <= to) out.push_back(std::move(rec));
    });
  }
  return out;
}

}  // namespace lakecov
