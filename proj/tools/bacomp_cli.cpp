// Command-line front end. Talks to the library only through bacomp.h.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bacomp/bacomp.h"

namespace {

constexpr int kExitError = 2;

struct Failure {
  std::string prefix;
  std::string message;
};

void check(bacomp_status s) {
  if (s != BACOMP_OK) throw Failure{bacomp_status_prefix(s), bacomp_last_error()};
}

struct AutomatonDeleter {
  void operator()(bacomp_automaton* a) const { bacomp_automaton_free(a); }
};
using Automaton = std::unique_ptr<bacomp_automaton, AutomatonDeleter>;

struct AnalysisDeleter {
  void operator()(bacomp_analysis* a) const { bacomp_analysis_free(a); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"io", "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Automaton load(const std::string& path, bool from_ba, std::size_t max_aps) {
  const std::string text = read_file(path);
  bacomp_automaton* a = nullptr;
  if (from_ba) check(bacomp_parse_ba(text.c_str(), &a));
  else check(bacomp_parse_hoa(text.c_str(), max_aps, &a));
  return Automaton(a);
}

std::string hoa_text(const bacomp_automaton* a) {
  char* s = nullptr;
  check(bacomp_print_hoa(a, &s));
  std::string out(s);
  bacomp_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{"io", "cannot write '" + path + "'"};
  out << text;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complementation and language inclusion for Buchi automata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bacomp_version());

  bool from_ba = false;
  std::size_t max_aps = 12;
  app.add_flag("--from-ba", from_ba, "Read inputs in .ba format instead of HOA");
  app.add_option("--max-aps", max_aps, "Reject HOA inputs with more atomic propositions")->capture_default_str();

  // complement
  auto* comp = app.add_subcommand("complement", "Complement a BA, print HOA");
  std::string comp_in;
  std::string comp_out;
  std::string nac_alg = "slice";
  bool no_post = false;
  std::size_t max_states = 1'000'000;
  bool comp_stats = false;
  comp->add_option("input", comp_in, "Input automaton")->required();
  comp->add_option("-o,--output", comp_out, "Output file (default stdout)");
  comp->add_option("--nac-alg", nac_alg,
                   "slice or rank: algorithm for NAC blocks; mono: every accepting SCC as a NAC")
      ->check(CLI::IsMember({"slice", "rank", "mono"}))
      ->capture_default_str();
  comp->add_flag("--no-postprocess", no_post, "Keep useless states");
  comp->add_option("--max-states", max_states, "Macrostate cap")->capture_default_str();
  comp->add_flag("--stats", comp_stats, "Print statistics as JSON");
  comp->add_flag("--from-ba", from_ba, "Read the input in .ba format");

  // inclusion
  auto* incl = app.add_subcommand("inclusion", "Decide L(A1) <= L(A2); exit 0 holds, 1 violated");
  std::string incl_a;
  std::string incl_b;
  bool incl_stats = false;
  std::size_t incl_max = 1'000'000;
  incl->add_option("a1", incl_a, "Left automaton")->required();
  incl->add_option("a2", incl_b, "Right automaton")->required();
  incl->add_flag("--stats", incl_stats, "Print statistics as JSON");
  incl->add_option("--max-states", incl_max, "Macrostate cap")->capture_default_str();
  incl->add_flag("--from-ba", from_ba, "Read the inputs in .ba format");

  // emptiness
  auto* empt = app.add_subcommand("emptiness", "Exit 0 if the language is empty, 1 otherwise");
  std::string empt_in;
  empt->add_option("input", empt_in, "Input automaton")->required();
  empt->add_flag("--from-ba", from_ba, "Read the input in .ba format");

  // analyze
  auto* anal = app.add_subcommand("analyze", "Classify SCCs, print JSON");
  std::string anal_in;
  anal->add_option("input", anal_in, "Input automaton")->required();
  anal->add_flag("--from-ba", from_ba, "Read the input in .ba format");

  // gen
  auto* gen = app.add_subcommand("gen", "Print a random BA as HOA");
  std::uint64_t seed = 0;
  std::size_t states = 4;
  std::size_t letters = 2;
  double density = 1.6;
  double acc_prob = 0.3;
  std::string gen_out;
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--states", states)->capture_default_str();
  gen->add_option("--letters", letters)->capture_default_str();
  gen->add_option("--density", density, "Transitions per state and letter")->capture_default_str();
  gen->add_option("--acc-prob", acc_prob, "Probability that a transition is accepting")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*comp) {
      const auto start = std::chrono::steady_clock::now();
      Automaton in = load(comp_in, from_ba, max_aps);
      bacomp_complement_options opts;
      bacomp_complement_options_init(&opts);
      opts.max_macrostates = max_states;
      opts.postprocess = no_post ? 0 : 1;
      opts.nac_alg = nac_alg == "mono" ? BACOMP_NAC_MONO : nac_alg == "rank" ? BACOMP_NAC_RANK : BACOMP_NAC_SLICE;
      bacomp_automaton* raw = nullptr;
      bacomp_complement_stats st{};
      check(bacomp_complement(in.get(), &opts, &raw, &st));
      Automaton out(raw);
      emit(hoa_text(out.get()), comp_out);
      if (comp_stats) {
        nlohmann::json j = {{"in_states", st.in_states},
                            {"out_states", st.out_states},
                            {"macrostates", st.macrostates},
                            {"blocks",
                             {{"iadac", st.iadac_blocks},
                              {"iwac", st.iwac_blocks},
                              {"dac", st.dac_blocks},
                              {"nac", st.nac_blocks}}},
                            {"time_ms", elapsed_ms(start)}};
        // Keep stdout a single document: stats go to stderr when the automaton is on stdout.
        (comp_out.empty() ? std::cerr : std::cout) << j.dump() << "\n";
      }
      return 0;
    }
    if (*incl) {
      const auto start = std::chrono::steady_clock::now();
      Automaton a1 = load(incl_a, from_ba, max_aps);
      Automaton a2 = load(incl_b, from_ba, max_aps);
      bacomp_complement_options opts;
      bacomp_complement_options_init(&opts);
      opts.max_macrostates = incl_max;
      int holds = 0;
      bacomp_inclusion_stats st{};
      check(bacomp_included(a1.get(), a2.get(), &opts, &holds, &st));
      if (incl_stats) {
        nlohmann::json j = {{"result", holds != 0},
                            {"product_states", st.product_states},
                            {"explored_transitions", st.explored_transitions},
                            {"time_ms", elapsed_ms(start)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (holds != 0 ? "included" : "not included") << "\n";
      }
      return holds != 0 ? 0 : 1;
    }
    if (*empt) {
      Automaton a = load(empt_in, from_ba, max_aps);
      int empty = 0;
      check(bacomp_is_empty(a.get(), &empty));
      std::cout << (empty != 0 ? "empty" : "nonempty") << "\n";
      return empty != 0 ? 0 : 1;
    }
    if (*anal) {
      Automaton a = load(anal_in, from_ba, max_aps);
      bacomp_analysis* raw = nullptr;
      check(bacomp_analyze(a.get(), &raw));
      std::unique_ptr<bacomp_analysis, AnalysisDeleter> an(raw);
      nlohmann::ordered_json counts;
      for (auto c : {BACOMP_SCC_NONACC, BACOMP_SCC_IADAC, BACOMP_SCC_IWAC, BACOMP_SCC_DAC, BACOMP_SCC_NAC})
        counts[bacomp_scc_class_name(c)] = 0;
      nlohmann::ordered_json sccs = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < bacomp_analysis_num_sccs(an.get()); ++i) {
        std::vector<std::uint32_t> members(bacomp_analysis_scc_members(an.get(), i, nullptr, 0));
        bacomp_analysis_scc_members(an.get(), i, members.data(), members.size());
        const char* cls = bacomp_scc_class_name(bacomp_analysis_scc_class(an.get(), i));
        counts[cls] = counts[cls].get<int>() + 1;
        sccs.push_back({{"id", i}, {"class", cls}, {"states", members}});
      }
      nlohmann::ordered_json j = {{"sccs", sccs}, {"counts", counts},
                                  {"elevator", bacomp_analysis_is_elevator(an.get()) != 0}};
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*gen) {
      bacomp_automaton* raw = nullptr;
      check(bacomp_random_ba(seed, states, letters, density, acc_prob, &raw));
      Automaton a(raw);
      emit(hoa_text(a.get()), gen_out);
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << f.prefix << ": " << f.message << "\n";
    return kExitError;
  }
  return kExitError;
}
