// Copyright 2026 The ArchOnto Migration Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// archonto: command-line front end.
//
//   archonto migrate  --in corpus.jsonl [--out graph.nt] [--format turtle]
//   archonto validate --in graph.nt | --corpus corpus.jsonl [--tsv]
//   archonto stats    --in graph.nt | --corpus corpus.jsonl [--tsv]
//   archonto rules    --dump [--rules file.mdl] | --check file.mdl
//   archonto schema
//
// Exit status: 0 success, 1 validation or record errors, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "archonto.hpp"

namespace {

using namespace archonto;

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kBadInput = 2;

struct RunConfig {
  std::string input;
  std::string corpus;
  std::string output;
  std::string report;
  std::string format = "ntriples";
  std::string base_iri = std::string(kDefaultBaseIri);
  std::string inherit;
  std::string vocab_file;
  std::string nesting_file;
  std::string rules_file;
  std::string check_file;
  bool strict = false;
  bool fail_fast = false;
  bool tsv = false;
  bool dump = false;
};

// A record failed under --fail-fast; maps to exit status 1.
struct RecordFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for unreadable or malformed inputs; maps to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << data;
}

template <typename F>
auto load(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(what + ": " + std::string(to_string(e.kind())) + ": " + e.what());
  }
}

VocabularyRegistry registry_for(const RunConfig& config) {
  if (config.vocab_file.empty()) return builtin_vocabularies();
  return load(config.vocab_file, [&] { return load_vocabularies(read_file(config.vocab_file)); });
}

LevelNestingGraph nesting_for(const RunConfig& config) {
  if (config.nesting_file.empty()) return default_nesting();
  return load(config.nesting_file, [&] { return load_nesting(read_file(config.nesting_file)); });
}

RuleSet rules_for(const RunConfig& config) {
  if (config.rules_file.empty()) return builtin_rules();
  return load(config.rules_file, [&] { return parse_mdl(read_file(config.rules_file)); });
}

std::set<std::string, std::less<>> inheritable_for(const RunConfig& config) {
  if (config.inherit.empty()) return default_inheritable();
  std::set<std::string, std::less<>> out;
  if (config.inherit == "none") return out;
  std::stringstream list(config.inherit);
  std::string key;
  while (std::getline(list, key, ',')) {
    key = std::string(trim(key));
    if (key.empty()) continue;
    if (find_field(key) == nullptr) throw InputError("--inherit: unknown element id '" + key + "'");
    if (is_identity_field(key)) {
      std::cerr << "archonto: identity element " << key << " is never inherited; ignored\n";
      continue;
    }
    out.insert(key);
  }
  return out;
}

MigrationResult migrate_corpus(const RunConfig& config, const std::string& path) {
  const auto tree = load(path, [&] { return parse_corpus(read_file(path)); });
  const auto resolved = resolve_inheritance(tree, inheritable_for(config));
  MigrationOptions options{config.base_iri, config.strict, config.fail_fast};
  const auto rules = rules_for(config);
  const auto registry = registry_for(config);
  try {
    return migrate_tree(resolved, rules, builtin_schema(), registry, options);
  } catch (const Error& e) {
    throw RecordFailure(std::string("stopped (--fail-fast): ") + e.what());
  }
}

void emit_issues(const RunConfig& config, const MigrationResult& result) {
  const auto text = format_issues(result.issues);
  if (!config.report.empty()) {
    write_output(config.report, text);
  } else {
    std::cerr << text;
  }
}

Graph graph_for(const RunConfig& config, bool& record_errors) {
  record_errors = false;
  if (!config.input.empty()) {
    return load(config.input,
                [&] { return parse_ntriples(read_file(config.input), config.base_iri); });
  }
  if (config.corpus.empty()) throw InputError("one of --in or --corpus is required");
  auto result = migrate_corpus(config, config.corpus);
  emit_issues(config, result);
  record_errors = result.has_errors();
  return std::move(result.graph);
}

int run_migrate(const RunConfig& config) {
  auto result = migrate_corpus(config, config.input);
  const Format format = config.format == "turtle" ? Format::kTurtle : Format::kNTriples;
  write_output(config.output, serialize(result.graph, format));
  emit_issues(config, result);
  return result.has_errors() ? kFindings : kOk;
}

int run_validate(const RunConfig& config) {
  bool record_errors = false;
  const auto graph = graph_for(config, record_errors);
  const auto report =
      validate_graph(graph, builtin_schema(), registry_for(config), nesting_for(config));
  write_output(config.output,
               config.tsv ? format_findings_tsv(report) : format_findings_text(report));
  return report.errors() > 0 || record_errors ? kFindings : kOk;
}

int run_stats(const RunConfig& config) {
  bool record_errors = false;
  const auto graph = graph_for(config, record_errors);
  const auto report = usage_report(graph);
  for (const auto& id : report.unknown_ids) std::cerr << "archonto: unknown " << id << "\n";
  write_output(config.output, config.tsv ? format_usage_tsv(report) : format_usage_text(report));
  return record_errors ? kFindings : kOk;
}

int run_rules(const RunConfig& config) {
  if (!config.check_file.empty()) {
    const auto rules =
        load(config.check_file, [&] { return parse_mdl(read_file(config.check_file)); });
    std::cerr << config.check_file << ": " << rules.rules.size() << " rule(s) OK\n";
    return kOk;
  }
  write_output(config.output, render_mdl(rules_for(config)));
  return kOk;
}

int run_schema(const RunConfig& config) {
  write_output(config.output, builtin_schema().dump());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ArchOnto migration of ISAD(G) records to RDF"};
  app.require_subcommand(1);
  RunConfig config;
  if (const char* env = std::getenv("ARCHONTO_BASE_IRI"); env != nullptr && *env != '\0') {
    config.base_iri = env;
  }

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", config.output, "Output path (default: standard output)");
    cmd->add_option("--base-iri", config.base_iri, "Base IRI for minted nodes")
        ->envname("ARCHONTO_BASE_IRI");
  };
  auto add_migration = [&](CLI::App* cmd) {
    cmd->add_flag("--strict", config.strict, "Reject range and vocabulary errors while building");
    cmd->add_option("--inherit", config.inherit,
                    "Comma-separated inheritable element ids, or 'none'");
    cmd->add_option("--vocab", config.vocab_file, "Vocabulary file (CLASS<TAB>TERM)");
    cmd->add_option("--rules", config.rules_file, "MDL rule file");
    cmd->add_flag("--fail-fast", config.fail_fast, "Stop at the first failing record");
    cmd->add_option("--report", config.report, "Error report path (default: standard error)");
  };

  auto* migrate = app.add_subcommand("migrate", "Migrate a JSONL corpus to RDF");
  migrate->add_option("--in", config.input, "Corpus file (JSON Lines)")->required();
  migrate->add_option("--format", config.format, "ntriples or turtle")
      ->check(CLI::IsMember({"ntriples", "turtle"}));
  add_common(migrate);
  add_migration(migrate);

  auto* validate = app.add_subcommand("validate", "Validate a graph or a migrated corpus");
  validate->add_option("--in", config.input, "N-Triples graph");
  validate->add_option("--corpus", config.corpus, "Corpus to migrate in memory");
  validate->add_option("--nesting", config.nesting_file, "Nesting file (UPPER<TAB>LOWER)");
  validate->add_flag("--tsv", config.tsv, "SEVERITY<TAB>CODE<TAB>SUBJECT<TAB>MESSAGE lines");
  add_common(validate);
  add_migration(validate);

  auto* stats = app.add_subcommand("stats", "Class and property usage counts");
  stats->add_option("--in", config.input, "N-Triples graph");
  stats->add_option("--corpus", config.corpus, "Corpus to migrate in memory");
  stats->add_flag("--tsv", config.tsv, "ONTOLOGY<TAB>ID<TAB>COUNT lines");
  add_common(stats);
  add_migration(stats);

  auto* rules = app.add_subcommand("rules", "Dump or check MDL rules");
  auto* dump = rules->add_flag("--dump", config.dump, "Print rules in canonical MDL");
  auto* check = rules->add_option("--check", config.check_file, "Parse a rule file and report");
  dump->excludes(check);
  rules->add_option("--rules", config.rules_file, "Rule file to dump instead of the built-ins");
  rules->add_option("--out", config.output, "Output path (default: standard output)");

  auto* schema = app.add_subcommand("schema", "Dump the ontology schema");
  schema->add_option("--out", config.output, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    normalize_base_iri(config.base_iri);
    if (migrate->parsed()) return run_migrate(config);
    if (validate->parsed()) return run_validate(config);
    if (stats->parsed()) return run_stats(config);
    if (rules->parsed()) return run_rules(config);
    if (schema->parsed()) return run_schema(config);
  } catch (const InputError& e) {
    std::cerr << "archonto: " << e.what() << "\n";
    return kBadInput;
  } catch (const RecordFailure& e) {
    std::cerr << "archonto: " << e.what() << "\n";
    return kFindings;
  } catch (const Error& e) {
    std::cerr << "archonto: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
