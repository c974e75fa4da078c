// specrep: eigenvalues and minimal polynomials of permutations in
// irreducible representations of S_n and A_n.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "specrep/specrep.hpp"

using namespace specrep;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string group = "S";
  std::string lambda, mu;
  int n = 0;
  std::string format = "text";
  bool oracle = false;
  int workers = 0;
  int max_n = 12;
  std::string cache_dir;
  std::string report;
  std::string cache_action;
};

Group parse_group(const std::string& g) {
  if (g == "S" || g == "s") return Group::S;
  if (g == "A" || g == "a") return Group::A;
  throw UsageError("--group must be S or A, got '" + g + "'");
}

struct Query {
  Group group;
  CharacterSpec chi;
  ClassSpec cls;
  Partition lambda;
  CycleType mu;
};

Query parse_query(const Options& opt) {
  if (opt.lambda.empty() || opt.mu.empty()) throw UsageError("--lambda and --mu are required");
  const Group group = parse_group(opt.group);
  auto [lambda_text, chi_sign] = split_sign_suffix(opt.lambda);
  auto [mu_text, cls_sign] = split_sign_suffix(opt.mu);
  const Partition lambda = parse_partition(lambda_text);
  const CycleType mu(parse_partition(mu_text, true));
  if (lambda.size() != mu.n())
    throw UsageError("size mismatch: lambda is a partition of " + std::to_string(lambda.size()) + ", mu of " +
                     std::to_string(mu.n()));
  if (group == Group::S) {
    if (chi_sign || cls_sign) throw UsageError("split signs are only meaningful with --group A");
    return {group, lambda, mu, lambda, mu};
  }
  if (lambda.size() < 3) throw UsageError("--group A needs n >= 3");
  if (!chi_sign && is_self_conjugate(lambda))
    throw UsageError("self-conjugate lambda " + lambda.to_string() + " needs a split sign (+ or -)");
  if (!cls_sign && mu.is_even() && mu.splits_in_alternating())
    throw UsageError("class " + mu.to_string() + " splits in A_n and needs a sign (+ or -)");
  return {group, AnCharLabel(lambda, chi_sign), AnClass(mu, cls_sign), lambda, mu};
}

void load_cache_for(const Options& opt, int n) {
  if (auto dir = character_cache_dir(opt.cache_dir.empty() ? std::nullopt : std::optional(opt.cache_dir)))
    load_character_cache(*dir, n);
}

bool is_trivial(const Query& q) {
  const int n = q.lambda.size();
  if (q.lambda == Partition{n}) return true;
  return q.group == Group::A && conjugate(q.lambda) == Partition{n};
}

bool is_sign(const Query& q) { return q.group == Group::S && q.lambda.length() == q.lambda.size() && q.lambda.size() > 1; }

// Classifier answer; trivial and sign representations sit outside the case
// list and carry no tag.
std::pair<std::optional<CaseTag>, SpectrumSet> classify(const Query& q) {
  if (is_trivial(q)) return {std::nullopt, SpectrumSet::from_exponents(q.mu.order(), {0})};
  if (is_sign(q)) return {std::nullopt, SpectrumSet::from_exponents(q.mu.order(), {q.mu.is_even() ? 0 : q.mu.order() / 2})};
  ClassifiedResult r = q.group == Group::S ? classify_sn(q.lambda, q.mu)
                                           : classify_an(std::get<AnCharLabel>(q.chi), std::get<AnClass>(q.cls));
  return {r.case_tag, r.spectrum};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string sign_pair(const Query& q) {
  if (q.group == Group::S) return "";
  const auto& chi = std::get<AnCharLabel>(q.chi);
  const auto& cls = std::get<AnClass>(q.cls);
  if (!chi.split && !cls.split) return "";
  return std::string(chi.split ? std::string(1, sign_char(*chi.split)) : "") + "," +
         (cls.split ? std::string(1, sign_char(*cls.split)) : "");
}

int cmd_minpoly(const Options& opt) {
  const Query q = parse_query(opt);
  load_cache_for(opt, q.lambda.size());
  const auto [tag, spectrum] = classify(q);
  const MinPoly p = min_poly_from_spectrum(spectrum);
  std::optional<SpectrumSet> oracle;
  if (opt.oracle) oracle = spectrum_oracle(q.chi, q.cls);
  const bool agree = !oracle || (oracle->same_set(spectrum) && (!tag || is_full_tag(*tag) == oracle->is_full()));

  if (opt.format == "json") {
    json j{{"group", to_string(q.group)},
           {"lambda", opt.lambda},
           {"mu", opt.mu},
           {"case", tag ? json(to_string(*tag)) : json(nullptr)},
           {"spectrum", to_json(spectrum)},
           {"minpoly", to_json(p)}};
    if (oracle) j["oracle"] = {{"spectrum", to_json(*oracle)}, {"agrees", agree}};
    std::cout << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << "lambda,mu,split,order,case,minpoly,exponents" << (oracle ? ",oracle" : "") << '\n';
    std::cout << csv_field(q.lambda.to_string()) << ',' << csv_field(q.mu.to_string()) << ',' << csv_field(sign_pair(q))
              << ',' << spectrum.order << ',' << (tag ? to_string(*tag) : "") << ',' << csv_field(p.display()) << ','
              << csv_field(spectrum.exponents_string()) << (oracle ? (agree ? ",agree" : ",MISMATCH") : "") << '\n';
  } else {
    std::cout << p.display() << (tag ? " [case " + case_label(*tag) + "]" : "") << '\n';
    std::cout << "order " << spectrum.order << ", exponents " << spectrum.exponents_string() << '\n';
    if (oracle)
      std::cout << "oracle: " << (agree ? "agree" : "MISMATCH, oracle exponents " + oracle->exponents_string()) << '\n';
  }
  return agree ? 0 : 1;
}

int cmd_spectrum(const Options& opt) {
  const Query q = parse_query(opt);
  load_cache_for(opt, q.lambda.size());
  const SpectrumSet s = spectrum_oracle(q.chi, q.cls);
  if (opt.format == "json") {
    json j{{"group", to_string(q.group)}, {"lambda", opt.lambda}, {"mu", opt.mu}, {"spectrum", to_json(s)}};
    if (q.group == Group::S) j["via_lr"] = spectrum_via_lr(q.lambda, q.mu).exponents;
    std::cout << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << "exponent,multiplicity\n";
    for (const auto& [e, m] : *s.multiplicities) std::cout << e << ',' << m << '\n';
  } else {
    std::cout << "order " << s.order << ", exponents " << s.exponents_string() << '\n';
    for (const auto& [e, m] : *s.multiplicities) std::cout << "  zeta_" << s.order << "^" << e << "  x" << m << '\n';
  }
  return 0;
}

int cmd_character(const Options& opt) {
  const Query q = parse_query(opt);
  load_cache_for(opt, q.lambda.size());
  const std::string value = q.group == Group::S ? std::to_string(mn_character(q.lambda, q.mu))
                                                : an_character_value(std::get<AnCharLabel>(q.chi), std::get<AnClass>(q.cls)).to_string();
  if (opt.format == "json")
    std::cout << json{{"group", to_string(q.group)}, {"lambda", opt.lambda}, {"mu", opt.mu}, {"value", value}}.dump(2) << '\n';
  else
    std::cout << value << '\n';
  return 0;
}

void check_ceiling(const Options& opt) {
  if (opt.n < 1) throw UsageError("--n must be positive");
  if (opt.n > opt.max_n)
    throw UsageError("n = " + std::to_string(opt.n) + " exceeds the ceiling " + std::to_string(opt.max_n) +
                     " (raise it with --max-n)");
}

int cmd_table(const Options& opt) {
  check_ceiling(opt);
  const Group group = parse_group(opt.group);
  const int n = opt.n;
  if (group == Group::A && n < 3) throw UsageError("--group A needs n >= 3");
  load_cache_for(opt, n);

  std::vector<Query> rows;
  if (group == Group::S) {
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : cycle_types_of(n)) rows.push_back({group, lambda, mu, lambda, mu});
  } else {
    for (const auto& chi : an_character_labels(n, true))
      for (const auto& cls : an_classes(n)) rows.push_back({group, chi, cls, chi.lambda, cls.mu});
  }

  json out = json::array();
  if (opt.format == "csv") std::cout << "lambda,mu,split,order,case,minpoly,exponents\n";
  for (const auto& q : rows) {
    const auto [tag, s] = classify(q);
    const MinPoly p = min_poly_from_spectrum(s);
    const std::string case_str = tag ? to_string(*tag) : (is_trivial(q) ? "trivial" : "sign");
    if (opt.format == "csv") {
      std::cout << csv_field(q.lambda.to_string()) << ',' << csv_field(q.mu.to_string()) << ',' << csv_field(sign_pair(q))
                << ',' << s.order << ',' << case_str << ',' << csv_field(p.display()) << ','
                << csv_field(s.exponents_string()) << '\n';
    } else if (opt.format == "json") {
      out.push_back({{"lambda", q.lambda.to_string()}, {"mu", q.mu.to_string()}, {"split", sign_pair(q)},
                     {"order", s.order}, {"case", case_str}, {"minpoly", to_json(p)}, {"exponents", s.exponents}});
    } else {
      const std::string chi = q.group == Group::S ? q.lambda.to_string() : std::get<AnCharLabel>(q.chi).to_string();
      const std::string cls = q.group == Group::S ? q.mu.to_string() : std::get<AnClass>(q.cls).to_string();
      std::cout << std::left << std::setw(14) << chi << std::setw(14) << cls << std::setw(9) << case_str << p.display()
                << '\n';
    }
  }
  if (opt.format == "json") std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_verify(const Options& opt) {
  check_ceiling(opt);
  const Group group = parse_group(opt.group);
  int workers = opt.workers > 0 ? opt.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int n = 2; n <= opt.n; ++n) load_cache_for(opt, n);
  const VerifyReport report = verify_range(opt.n, group, workers);
  const std::string doc = to_json(report).dump(2);
  if (!opt.report.empty()) {
    std::ofstream out(opt.report);
    if (!out) throw std::runtime_error("cannot write report " + opt.report);
    out << doc << '\n';
  } else {
    std::cout << doc << '\n';
  }
  std::int64_t pairs = 0;
  for (const auto& e : report.entries) pairs += e.pairs_checked;
  std::cerr << "verify " << to_string(group) << " n<=" << opt.n << ": " << pairs << " pairs, "
            << report.mismatch_count() << " mismatches\n";
  return report.mismatch_count() == 0 ? 0 : 1;
}

int cmd_cache(const Options& opt) {
  const auto dir = character_cache_dir(opt.cache_dir.empty() ? std::nullopt : std::optional(opt.cache_dir));
  if (!dir) throw UsageError("no cache directory: pass --cache-dir or set SPECREP_CACHE_DIR");
  namespace fs = std::filesystem;
  auto cache_files = [&] {
    std::vector<fs::path> files;
    if (fs::is_directory(*dir))
      for (const auto& entry : fs::directory_iterator(*dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("characters-n", 0) == 0 && name.size() > 8 && name.substr(name.size() - 8) == ".v1.json")
          files.push_back(entry.path());
      }
    std::sort(files.begin(), files.end());
    return files;
  };
  if (opt.cache_action == "build") {
    check_ceiling(opt);
    for (int n = 1; n <= opt.n; ++n) std::cout << save_character_cache(*dir, n).string() << '\n';
  } else if (opt.cache_action == "list") {
    for (const auto& f : cache_files()) std::cout << f.string() << "  " << fs::file_size(f) << " bytes\n";
  } else if (opt.cache_action == "clear") {
    std::size_t removed = 0;
    for (const auto& f : cache_files()) removed += fs::remove(f) ? 1 : 0;
    std::cout << "removed " << removed << " file(s)\n";
  } else {
    throw UsageError("cache action must be build, list or clear");
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalues and minimal polynomials of permutations in irreducible representations of S_n and A_n"};
  app.require_subcommand(1);
  Options opt;

  auto add_query = [&](CLI::App* sub) {
    sub->add_option("--group", opt.group, "S or A")->check(CLI::IsMember({"S", "A", "s", "a"}));
    sub->add_option("--lambda", opt.lambda, "partition, e.g. 4,1 (A: trailing + or - when self-conjugate)")->required();
    sub->add_option("--mu", opt.mu, "cycle type, e.g. 5,3 (A: trailing + or - when the class splits)")->required();
    sub->add_option("--format", opt.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cache-dir", opt.cache_dir, "character cache directory (default $SPECREP_CACHE_DIR)");
  };
  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--group", opt.group, "S or A")->check(CLI::IsMember({"S", "A", "s", "a"}));
    sub->add_option("--n", opt.n, "degree")->required();
    sub->add_option("--max-n", opt.max_n, "resource ceiling for n")->capture_default_str();
    sub->add_option("--cache-dir", opt.cache_dir, "character cache directory (default $SPECREP_CACHE_DIR)");
  };

  auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial via the classification");
  add_query(minpoly);
  minpoly->add_flag("--oracle", opt.oracle, "cross-check against the character oracle");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue multiplicities from the character oracle");
  add_query(spectrum);

  auto* character = app.add_subcommand("character", "exact character value");
  add_query(character);

  auto* table = app.add_subcommand("table", "all (character, class) rows for one n");
  add_sweep(table);
  table->add_option("--format", opt.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "compare classification and oracle for every n up to --n");
  add_sweep(verify);
  verify->add_option("--workers", opt.workers, "worker threads (default: hardware concurrency)");
  verify->add_option("--report", opt.report, "write the JSON report here instead of stdout");

  auto* cache = app.add_subcommand("cache", "manage the on-disk character table cache");
  cache->add_option("action", opt.cache_action, "build, list or clear")->required()->check(CLI::IsMember({"build", "list", "clear"}));
  cache->add_option("--n", opt.n, "build tables for 1..n")->default_val(8);
  cache->add_option("--max-n", opt.max_n, "resource ceiling for n")->capture_default_str();
  cache->add_option("--cache-dir", opt.cache_dir, "character cache directory (default $SPECREP_CACHE_DIR)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*minpoly) return cmd_minpoly(opt);
    if (*spectrum) return cmd_spectrum(opt);
    if (*character) return cmd_character(opt);
    if (*table) return cmd_table(opt);
    if (*verify) return cmd_verify(opt);
    if (*cache) return cmd_cache(opt);
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
