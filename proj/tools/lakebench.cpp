#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lakecov/engine.hpp"
#include "lakecov/genomic.hpp"
#include "lakecov/index.hpp"
#include "lakecov/workload.hpp"

namespace {

using namespace lakecov;

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError(path + " line " + std::to_string(ln) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ParseError(path + " line " + std::to_string(ln) + ": empty key");
    out.push_back({key, trim(t.substr(eq + 1))});
  }
  return out;
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    auto n = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ParseError("config key " + key + ": not a non-negative integer: " + v);
  }
}

std::int64_t parse_i64(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    auto n = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ParseError("config key " + key + ": not an integer: " + v);
  }
}

double parse_f64(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ParseError("config key " + key + ": not a number: " + v);
  }
}

std::vector<std::string> split_commas(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

void apply_bench_key(BenchConfig& cfg, const std::string& k, const std::string& v) {
  if (k == "table") cfg.table = v;
  else if (k == "columns") cfg.columns = parse_u64(v, k);
  else if (k == "records") cfg.records = parse_u64(v, k);
  else if (k == "files") cfg.files = parse_u64(v, k);
  else if (k == "seed") cfg.seed = parse_u64(v, k);
  else if (k == "indexed-columns") cfg.indexed_columns = split_commas(v);
  else if (k == "entries-per-file") cfg.entries_per_file = parse_u64(v, k);
  else if (k == "queries") cfg.queries = parse_u64(v, k);
  else if (k == "shape") cfg.shape = query_shape_from_string(v);
  else if (k == "columns-per-predicate") cfg.columns_per_predicate = parse_u64(v, k);
  else if (k == "range-fraction") cfg.range_fraction = parse_f64(v, k);
  else if (k == "nested-fraction") cfg.nested_fraction = parse_f64(v, k);
  else if (k == "anchors-first") cfg.anchors_first = v == "1" || v == "true";
  else if (k == "mode") cfg.mode = exec_mode_from_string(v);
  else if (k == "k-multiplier") cfg.k_multiplier = parse_f64(v, k);
  else if (k == "cache-capacity") cfg.cache_capacity = parse_u64(v, k);
  else if (k == "policy") cfg.policy = policy_kind_from_string(v);
  else if (k == "w1") cfg.w1 = parse_f64(v, k);
  else if (k == "w2") cfg.w2 = parse_f64(v, k);
  else if (k == "backend") cfg.backend = cache_backend_from_string(v);
  else if (k == "latency-us") cfg.latency_us = parse_u64(v, k);
  else if (k == "value-min") cfg.value_min = parse_i64(v, k);
  else if (k == "value-max") cfg.value_max = parse_i64(v, k);
  else if (k == "zipf") cfg.zipf_s = parse_f64(v, k);
  else throw ParseError("unknown config key: " + k);
}

struct GenomicArgs {
  std::string input;
  std::int64_t bucket_width = 100000;
  std::string chrom;
  std::int64_t from = 0;
  std::int64_t to = 0;
};

void apply_genomic_key(GenomicArgs& g, const std::string& k, const std::string& v) {
  if (k == "input") g.input = v;
  else if (k == "bucket-width") g.bucket_width = parse_i64(v, k);
  else if (k == "chrom") g.chrom = v;
  else if (k == "from") g.from = parse_i64(v, k);
  else if (k == "to") g.to = parse_i64(v, k);
  else throw ParseError("unknown config key: " + k);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string sub = args.empty() ? "" : args[0];
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }

  BenchConfig cfg;
  GenomicArgs gargs;
  std::string store_dir;
  std::string report_path;

  try {
    if (!config_path.empty()) {
      bool bench = sub == "gen" || sub == "index" || sub == "run";
      for (const auto& [k, v] : parse_config_file(config_path)) {
        if (k == "store") store_dir = v;
        else if (k == "report" && sub == "run") report_path = v;
        else if (bench) apply_bench_key(cfg, k, v);
        else apply_genomic_key(gargs, k, v);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::string mode_str = to_string(cfg.mode);
  std::string shape_str = to_string(cfg.shape);
  std::string policy_str = to_string(cfg.policy);
  std::string backend_str = to_string(cfg.backend);
  std::string indexed_cols_str;

  CLI::App app{"Coverage-set query harness over a simulated object store"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* s) {
    s->add_option("--store", store_dir, "object store directory");
    s->add_option("--config", config_path, "key=value config file, # comments allowed");
  };
  auto add_bench = [&](CLI::App* s) {
    s->add_option("--table", cfg.table);
    s->add_option("--seed", cfg.seed);
    s->add_option("--value-min", cfg.value_min);
    s->add_option("--value-max", cfg.value_max);
  };

  CLI::App* gen = app.add_subcommand("gen", "generate a random lake into the store");
  add_common(gen);
  add_bench(gen);
  gen->add_option("--columns", cfg.columns);
  gen->add_option("--records", cfg.records);
  gen->add_option("--files", cfg.files);
  gen->add_option("--zipf", cfg.zipf_s, "skew exponent; 0 keeps values uniform");

  CLI::App* index = app.add_subcommand("index", "build the sorted column indexes");
  add_common(index);
  add_bench(index);
  index->add_option("--indexed-columns", indexed_cols_str, "comma-separated; default all");
  index->add_option("--entries-per-file", cfg.entries_per_file);

  CLI::App* run = app.add_subcommand("run", "execute a workload and report read counts");
  add_common(run);
  add_bench(run);
  run->add_option("--queries", cfg.queries);
  run->add_option("--shape", shape_str, "conj-ranges | cnf | needle");
  run->add_option("--columns-per-predicate", cfg.columns_per_predicate);
  run->add_option("--range-fraction", cfg.range_fraction);
  run->add_option("--nested-fraction", cfg.nested_fraction);
  run->add_flag("--anchors-first", cfg.anchors_first);
  run->add_option("--mode", mode_str, "baseline | indexed | cached | cached-spatial | indexed-cached");
  run->add_option("--k-multiplier", cfg.k_multiplier);
  run->add_option("--cache-capacity", cfg.cache_capacity, "0 = unlimited");
  run->add_option("--policy", policy_str, "unlimited | coverage | volume | combined");
  run->add_option("--w1", cfg.w1);
  run->add_option("--w2", cfg.w2);
  run->add_option("--backend", backend_str, "list | spatial");
  run->add_option("--latency-us", cfg.latency_us, "injected per-read latency");
  run->add_option("--report", report_path, "per-query TSV output path; default stdout");

  CLI::App* etl = app.add_subcommand("genomic-etl", "partition raw variants into bucket files");
  add_common(etl);
  etl->add_option("--input", gargs.input, "raw TSV: chrom pos ref alt sample_id");
  etl->add_option("--bucket-width", gargs.bucket_width);

  CLI::App* gquery = app.add_subcommand("genomic-query", "fetch variants in a region");
  add_common(gquery);
  gquery->add_option("--chrom", gargs.chrom);
  gquery->add_option("--from", gargs.from);
  gquery->add_option("--to", gargs.to);
  gquery->add_option("--bucket-width", gargs.bucket_width);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    cfg.mode = exec_mode_from_string(mode_str);
    cfg.shape = query_shape_from_string(shape_str);
    cfg.policy = policy_kind_from_string(policy_str);
    cfg.backend = cache_backend_from_string(backend_str);
    if (!indexed_cols_str.empty()) cfg.indexed_columns = split_commas(indexed_cols_str);
    if (store_dir.empty()) {
      std::cerr << "error: --store is required (flag or config)\n";
      return 1;
    }
    DirectoryStore store(store_dir);

    if (gen->parsed()) {
      Lake lake = generate_lake(cfg, store);
      std::cout << "table\t" << lake.name() << "\nfiles\t" << lake.files().size() << "\nrows\t"
                << lake.total_rows() << "\n";
    } else if (index->parsed()) {
      Lake lake = load_lake(store, cfg.table);
      std::vector<std::string> cols = cfg.indexed_columns;
      if (cols.empty())
        for (const auto& c : lake.schema().columns()) cols.push_back(c.name);
      IndexBuildOptions opts;
      opts.entries_per_file = cfg.entries_per_file;
      RootIndex root = build_index(lake, cols, opts, store);
      std::cout << "indexed-columns\t" << cols.size() << "\nroot-entries\t"
                << root.entries().size() << "\n";
    } else if (run->parsed()) {
      ScenarioSummary sum;
      if (report_path.empty()) {
        sum = run_scenario(cfg, store, std::cout);
      } else {
        std::ofstream out(report_path);
        if (!out) throw ParseError("cannot open report path: " + report_path);
        sum = run_scenario(cfg, store, out);
        std::cout << "queries\t" << sum.queries << "\nbaseline-gets\t" << sum.baseline_gets
                  << "\nmode-gets\t" << sum.mode_gets << "\nread-reduction-pct\t"
                  << sum.read_reduction_pct << "\nhit-rate\t" << sum.hit_rate << "\nfallbacks\t"
                  << sum.fallbacks << "\n";
      }
    } else if (etl->parsed()) {
      if (gargs.input.empty()) {
        std::cerr << "error: --input is required\n";
        return 1;
      }
      auto raw = parse_raw_variants(slurp(gargs.input));
      auto manifest = partition_variants(raw, gargs.bucket_width, store);
      std::size_t files = 0;
      for (const auto& [chrom, buckets] : manifest.buckets) files += buckets.size();
      std::cout << "raw-variants\t" << raw.size() << "\nbucket-files\t" << files << "\n";
    } else if (gquery->parsed()) {
      if (gargs.chrom.empty()) {
        std::cerr << "error: --chrom is required\n";
        return 1;
      }
      auto manifest = load_genomic_manifest(store, gargs.bucket_width);
      store.reset_read_count();
      auto rows = query_range(manifest, gargs.chrom, gargs.from, gargs.to, store);
      for (const auto& r : rows) {
        std::cout << r.chrom << '\t' << r.pos << '\t' << r.ref << '\t' << r.alt << '\t';
        for (std::size_t i = 0; i < r.ids.size(); ++i) std::cout << (i ? "," : "") << r.ids[i];
        std::cout << '\n';
      }
      std::cout << "# variants\t" << rows.size() << "\n# gets\t" << store.read_count() << "\n";
    }
  } catch (const CorrectnessError& e) {
    std::cerr << "correctness failure: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
