#include "metanil/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "metanil/errors.hpp"
#include "metanil/report.hpp"

namespace metanil {

namespace {

using nlohmann::json;

/// Runs tasks over a small pool, captures the first exception.
void run_tasks(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string prime_set_text(const PrimeSet& pi) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pi.primes.size(); ++i) {
    if (i) out << ", ";
    out << pi.primes[i];
  }
  out << '}';
  return out.str();
}

std::string orders_text(const std::vector<std::uint64_t>& orders) {
  std::ostringstream out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out << ' ';
    out << orders[i];
  }
  return out.str();
}

const char* mode_name(ScanMode mode) {
  return mode == ScanMode::canonical ? "canonical" : "fast";
}

struct GroupAnalysis {
  PrimeSet pi;
  SeriesRecord lcs;
  bool soluble = false;
  std::optional<int> derived_length;
  std::uint64_t derived_stable_order = 1;
  Nilpotency nil;
  std::uint64_t fitting_order = 0;
  std::optional<int> height;
  bool metanilpotent = false;
};

GroupAnalysis analyze_group(const Group& g, std::uint64_t cap) {
  GroupAnalysis a;
  a.pi = prime_set(g);
  a.lcs = lower_central_series(g, cap);
  SeriesRecord ds = derived_series(g, cap);
  const Subgroup& derived_stable = ds.terms[ds.stabilized_at - 1];
  a.soluble = derived_stable.trivial();
  a.derived_stable_order = derived_stable.order();
  if (a.soluble) a.derived_length = static_cast<int>(ds.stabilized_at) - 1;
  const Subgroup& lcs_stable = a.lcs.terms[a.lcs.stabilized_at - 1];
  a.nil = lcs_stable.trivial() ? Nilpotency{true, static_cast<int>(a.lcs.stabilized_at) - 1}
                               : Nilpotency{false, 0};
  a.fitting_order = fitting_subgroup(g, cap).order();
  if (a.soluble) {
    a.height = fitting_height(g, cap);
    a.metanilpotent = *a.height <= 2;
  }
  return a;
}

}  // namespace

Group resolve_group(const std::string& input) {
  if (std::filesystem::exists(input)) return Group::build(load_spec(input));
  if (auto spec = builtin_spec(input)) return Group::build(std::move(*spec));
  throw Error(Errc::parse_error, "'" + input + "' is neither a file nor a builtin group name");
}

std::vector<CorpusEntry> resolve_corpus(const std::string& corpus) {
  if (corpus == "builtin") return standard_corpus();
  return load_corpus(corpus);
}

std::pair<int, int> parse_k_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](unsigned char c) { return std::isdigit(c); }))
      throw Error(Errc::parse_error, "bad k value '" + text + "'");
    return std::stoi(s);
  };
  auto dots = text.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = parse_int(text);
  } else {
    lo = parse_int(text.substr(0, dots));
    hi = parse_int(text.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw Error(Errc::parse_error, "bad k range '" + text + "'");
  return {lo, hi};
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Group g = resolve_group(config.input);
  const bool timing = config.mode == ScanMode::fast;
  GroupAnalysis a = analyze_group(g, config.cap);

  std::vector<ConditionReport> conditions;
  std::vector<TheoremVerdict> verdicts;
  for (int k = config.k_lo; k <= config.k_hi; ++k) {
    ConditionReport cond = check_condition(g, k, config.mode, config.jobs, config.cap);
    Subgroup gamma_k = generated_subgroup(g, gamma_values(g, k, config.cap));
    Nilpotency nil = nilpotency(gamma_k.group, config.cap);
    verdicts.push_back(TheoremVerdict{k, cond.holds, nil.nilpotent,
                                      cond.holds == nil.nilpotent, gamma_k.order()});
    conditions.push_back(std::move(cond));
  }
  const bool all_consistent =
      std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.consistent; });

  if (config.format == RunConfig::Format::json) {
    json checks = json::array();
    for (std::size_t i = 0; i < verdicts.size(); ++i)
      checks.push_back(json{{"k", verdicts[i].k},
                            {"condition", condition_to_json(conditions[i], timing)},
                            {"verdict", theorem_to_json(verdicts[i])}});
    json doc{
        {"schema", 1},
        {"command", "analyze"},
        {"group", json{{"name", g.name()}, {"degree", g.degree()}, {"order", g.order()}}},
        {"pi", a.pi.primes},
        {"soluble", a.soluble},
        {"derived_length", a.derived_length ? json(*a.derived_length) : json(nullptr)},
        {"lcs_orders", a.lcs.term_orders()},
        {"nilpotent", a.nil.nilpotent},
        {"nilpotency_class", a.nil.nilpotent ? json(a.nil.cls) : json(nullptr)},
        {"fitting_order", a.fitting_order},
        {"fitting_height", a.height ? json(*a.height) : json(nullptr)},
        {"metanilpotent", a.metanilpotent},
        {"mode", mode_name(config.mode)},
        {"checks", checks},
    };
    out << doc.dump(2) << '\n';
  } else {
    out << "group: " << g.name() << "  (degree " << g.degree() << ", order " << g.order()
        << ")\n";
    out << "pi(G): " << prime_set_text(a.pi) << '\n';
    if (a.soluble)
      out << "soluble: yes  (derived length " << *a.derived_length << ")\n";
    else
      out << "soluble: no  (derived series stabilizes at order " << a.derived_stable_order
          << ")\n";
    out << "lower central series orders: " << orders_text(a.lcs.term_orders()) << '\n';
    if (a.nil.nilpotent)
      out << "nilpotent: yes  (class " << a.nil.cls << ")\n";
    else
      out << "nilpotent: no\n";
    out << "fitting subgroup order: " << a.fitting_order << '\n';
    if (a.height)
      out << "fitting height: " << *a.height << '\n';
    else
      out << "fitting height: n/a (not soluble)\n";
    out << "metanilpotent: " << (a.metanilpotent ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      const ConditionReport& c = conditions[i];
      const TheoremVerdict& v = verdicts[i];
      out << "k=" << v.k << ": condition " << (c.holds ? "holds" : "FAILS") << "  [|X_k|="
          << c.x_size << ", pairs=" << c.pairs_checked;
      if (timing) out << ", elapsed=" << c.elapsed.count() << "ms";
      out << "]";
      if (c.witness) out << "  witness " << witness_text(*c.witness);
      out << '\n';
      out << "     gamma_" << v.k << " order " << v.gamma_k_order << ", nilpotent "
          << (v.gamma_k_nilpotent ? "yes" : "no") << " -> "
          << (v.consistent ? "consistent" : "INCONSISTENT") << '\n';
    }
  }
  if (!all_consistent) {
    err << "inconsistent verdict: the condition and nilpotency disagree (implementation bug)\n";
    return 1;
  }
  return 0;
}

int cmd_witness(const RunConfig& config, std::ostream& out, std::ostream&) {
  Group g = resolve_group(config.input);
  const int k = config.k_lo;
  ConditionReport rep = check_condition(g, k, ScanMode::canonical, config.jobs, config.cap);
  if (rep.holds)
    throw Error(Errc::no_witness, "the condition holds for " + g.name() + " at k = " +
                                      std::to_string(k) + "; no violating pair exists");
  if (config.format == RunConfig::Format::json) {
    json doc{{"schema", 1},
             {"command", "witness"},
             {"group", json{{"name", g.name()}, {"degree", g.degree()}, {"order", g.order()}}},
             {"k", k},
             {"witness", witness_to_json(*rep.witness)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "group " << g.name() << ", k=" << k << ": witness " << witness_text(*rep.witness)
        << '\n';
  }
  return 0;
}

VerifyOutput run_verify(const RunConfig& config) {
  std::vector<CorpusEntry> corpus = resolve_corpus(config.corpus);
  std::vector<Group> groups;
  groups.reserve(corpus.size());
  for (const CorpusEntry& e : corpus) groups.push_back(Group::build(e.spec));

  struct Task {
    std::size_t group;
    int k;
  };
  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (int k = config.k_lo; k <= config.k_hi; ++k) tasks.push_back({gi, k});

  std::vector<TheoremVerdict> verdicts(tasks.size());
  std::vector<std::int64_t> task_ms(tasks.size(), 0);
  run_tasks(tasks.size(), config.jobs, [&](std::size_t t) {
    const auto t0 = std::chrono::steady_clock::now();
    verdicts[t] = verify_theorem(groups[tasks[t].group], tasks[t].k, config.mode, 1, config.cap);
    task_ms[t] = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  });

  struct GroupVerdict {
    CorollaryVerdict corollary;
    std::optional<bool> lemma_solu;
  };
  std::vector<GroupVerdict> group_verdicts(groups.size());
  run_tasks(groups.size(), config.jobs, [&](std::size_t gi) {
    GroupVerdict gv;
    gv.corollary = verify_corollary(groups[gi], config.cap);
    if (gv.corollary.consistent && gv.corollary.metanilpotent)
      gv.lemma_solu = check_lemma_solu(groups[gi], *gv.corollary.min_k, config.cap);
    group_verdicts[gi] = std::move(gv);
  });

  std::size_t consistent = 0;
  for (const TheoremVerdict& v : verdicts) consistent += v.consistent ? 1 : 0;
  std::size_t corollary_consistent = 0;
  std::size_t lemma_checked = 0, lemma_ok = 0;
  for (const GroupVerdict& gv : group_verdicts) {
    corollary_consistent += gv.corollary.consistent ? 1 : 0;
    if (gv.lemma_solu) {
      ++lemma_checked;
      lemma_ok += *gv.lemma_solu ? 1 : 0;
    }
  }
  const bool all_consistent = consistent == verdicts.size() &&
                              corollary_consistent == groups.size() && lemma_ok == lemma_checked;

  VerifyOutput output;
  output.all_consistent = all_consistent;

  std::ostringstream out;
  if (config.format == RunConfig::Format::json) {
    json jgroups = json::array();
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      json theorem = json::array();
      for (std::size_t t = 0; t < tasks.size(); ++t)
        if (tasks[t].group == gi) theorem.push_back(theorem_to_json(verdicts[t]));
      const GroupVerdict& gv = group_verdicts[gi];
      jgroups.push_back(json{{"name", corpus[gi].name},
                             {"order", groups[gi].order()},
                             {"theorem", theorem},
                             {"corollary", corollary_to_json(gv.corollary)},
                             {"lemma_solu", gv.lemma_solu ? json(*gv.lemma_solu) : json(nullptr)}});
    }
    json doc{{"schema", 1},
             {"command", "verify"},
             {"corpus", config.corpus},
             {"mode", mode_name(config.mode)},
             {"k", json::array({config.k_lo, config.k_hi})},
             {"groups", jgroups},
             {"summary", json{{"groups", groups.size()},
                              {"theorem_checks", verdicts.size()},
                              {"theorem_consistent", consistent},
                              {"corollary_consistent", corollary_consistent},
                              {"lemma_solu_checked", lemma_checked},
                              {"lemma_solu_ok", lemma_ok},
                              {"all_consistent", all_consistent}}}};
    out << doc.dump(2) << '\n';
  } else {
    out << "criterion verification: corpus '" << config.corpus << "', " << groups.size()
        << " groups, k=" << config.k_lo << ".." << config.k_hi << ", mode "
        << mode_name(config.mode) << '\n';
    out << "  (+ condition holds, - condition fails; either is consistent unless marked !)\n";
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      out << std::left << std::setw(12) << corpus[gi].name << std::right << std::setw(7)
          << groups[gi].order() << "  ";
      for (std::size_t t = 0; t < tasks.size(); ++t)
        if (tasks[t].group == gi)
          out << (verdicts[t].consistent ? (verdicts[t].condition_holds ? '+' : '-') : '!');
      const GroupVerdict& gv = group_verdicts[gi];
      out << "  " << (gv.corollary.metanilpotent ? "meta " : "nonmeta ") << "k=";
      if (gv.corollary.min_k)
        out << *gv.corollary.min_k;
      else
        out << "none";
      out << (gv.corollary.consistent ? "" : " INCONSISTENT");
      if (gv.lemma_solu) out << "  solu:" << (*gv.lemma_solu ? "ok" : "FAIL");
      out << '\n';
    }
    out << "summary: " << groups.size() << " groups, " << verdicts.size() << " theorem checks ("
        << consistent << " consistent), corollary " << corollary_consistent << "/"
        << groups.size() << " consistent, lemma_solu " << lemma_ok << "/" << lemma_checked
        << " ok\n";
    out << "RESULT: " << (all_consistent ? "consistent" : "INCONSISTENT") << '\n';
  }
  output.report = out.str();

  std::ostringstream diag;
  std::vector<std::size_t> slow(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) slow[t] = t;
  std::stable_sort(slow.begin(), slow.end(),
                   [&](std::size_t a, std::size_t b) { return task_ms[a] > task_ms[b]; });
  diag << "slowest theorem checks:\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(5, slow.size()); ++i) {
    const Task& t = tasks[slow[i]];
    diag << "  " << corpus[t.group].name << " k=" << t.k << ": " << task_ms[slow[i]] << "ms\n";
  }
  output.diagnostics = diag.str();
  return output;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  VerifyOutput result = run_verify(config);
  out << result.report;
  err << result.diagnostics;
  return result.all_consistent ? 0 : 1;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"finite-group analyzer for the coprime-order product condition on gamma_k values"};
  app.require_subcommand(1);

  RunConfig config;
  std::string k_text;
  std::string mode_text = "fast";
  std::string format_text = "text";

  auto add_common = [&](CLI::App* cmd, const std::string& k_default) {
    cmd->add_option("--k", k_text, "k or range a..b")->default_val(k_default);
    cmd->add_option("--mode", mode_text, "fast|canonical")
        ->check(CLI::IsMember({"fast", "canonical"}));
    cmd->add_option("--format", format_text, "text|json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cap", config.cap, "element enumeration cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", config.jobs, "worker count")->check(CLI::PositiveNumber);
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full report for one group");
  analyze->add_option("--group", config.input, "group-spec file or builtin name")->required();
  add_common(analyze, "1..3");

  CLI::App* verify = app.add_subcommand(
      "verify", "theorem/corollary verification over a corpus; exit 1 on any inconsistency");
  verify->add_option("--corpus", config.corpus, "corpus manifest path or 'builtin'");
  add_common(verify, "1..6");

  CLI::App* witness = app.add_subcommand("witness", "canonical violating pair for one group");
  witness->add_option("--group", config.input, "group-spec file or builtin name")->required();
  add_common(witness, "1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    auto [lo, hi] = parse_k_range(k_text);
    config.k_lo = lo;
    config.k_hi = hi;
    config.mode = mode_text == "canonical" ? ScanMode::canonical : ScanMode::fast;
    config.format =
        format_text == "json" ? RunConfig::Format::json : RunConfig::Format::text;
    if (analyze->parsed()) return cmd_analyze(config, std::cout, std::cerr);
    if (witness->parsed()) return cmd_witness(config, std::cout, std::cerr);
    return cmd_verify(config, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::parse_error:
      case Errc::invalid_spec:
        return 2;
      case Errc::too_large:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace metanil
