// Command-line front end for the level-2 network toolkit.
//
//   levelnet extract <net.enwk> [--binets] -o <out.tnt>
//   levelnet build <in.tnt> -o <out.enwk> [--report]
//   levelnet eq <a.enwk> <b.enwk>
//   levelnet compare-trinets <a.enwk> <b.enwk>
//   levelnet gen --leaves <n> --seed <s> [--level {0,1,2}] -o <out.enwk>
//   levelnet validate <net.enwk>
//
// Exit codes: 0 success / predicate true, 1 predicate false or validation
// failure, 2 usage or input parse/contract error.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "levelnet/enewick.hpp"
#include "levelnet/isomorphism.hpp"
#include "levelnet/random_network.hpp"
#include "levelnet/reconstruct.hpp"
#include "levelnet/restriction.hpp"
#include "levelnet/structure.hpp"

namespace {

levelnet::Network readNetworkFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return levelnet::parseENewick(buf.str());
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

int runExtract(const std::string& netPath, bool includeBinets,
               const std::string& outPath) {
  levelnet::Network net = readNetworkFile(netPath);
  std::vector<std::string> problems = levelnet::validate(net);
  if (!problems.empty())
    throw std::runtime_error("input network is invalid: " + problems.front());
  levelnet::TrinetCollection collection =
      includeBinets ? levelnet::binetsAndTrinets(net) : levelnet::trinets(net);
  std::vector<levelnet::TrinetFileEntry> entries;
  for (const auto& [key, entry] : collection.entries())
    entries.push_back({entry.representative, entry.multiplicity});
  std::ofstream out(outPath);
  if (!out)
    throw std::runtime_error("cannot open '" + outPath + "' for writing");
  levelnet::writeTrinetFile(entries, out);
  if (!out) throw std::runtime_error("failed writing '" + outPath + "'");
  std::cout << "wrote " << collection.totalMultiplicity() << " networks ("
            << collection.entries().size() << " distinct) to " << outPath
            << "\n";
  return 0;
}

int runBuild(const std::string& inPath, const std::string& outPath,
             bool wantReport) {
  std::vector<levelnet::TrinetFileEntry> entries =
      levelnet::readTrinetFileAt(inPath);
  levelnet::ReconstructReport report;
  levelnet::TrinetCollection collection = levelnet::ingest(entries, report);
  levelnet::Network net = levelnet::reconstruct(collection, &report);
  writeTextFile(outPath, levelnet::writeENewick(net) + "\n");
  if (wantReport) {
    std::cout << "dropped: invalid " << report.droppedInvalid
              << ", non-recoverable " << report.droppedNonRecoverable
              << ", above level 2 " << report.droppedOversized << "\n";
    for (const std::string& line : report.stages)
      std::cout << "stage: " << line << "\n";
    for (const std::string& line : report.notes)
      std::cout << "note: " << line << "\n";
  }
  std::cout << "wrote " << outPath << "\n";
  return 0;
}

int runEq(const std::string& aPath, const std::string& bPath) {
  levelnet::Network a = readNetworkFile(aPath);
  levelnet::Network b = readNetworkFile(bPath);
  if (levelnet::isomorphic(a, b)) {
    std::cout << "isomorphic\n";
    return 0;
  }
  std::cout << "not isomorphic\n";
  return 1;
}

int runCompareTrinets(const std::string& aPath, const std::string& bPath) {
  levelnet::Network a = readNetworkFile(aPath);
  levelnet::Network b = readNetworkFile(bPath);
  std::set<std::string> keysA, keysB;
  {
    const levelnet::TrinetCollection ta = levelnet::trinets(a);
    for (const auto& [key, entry] : ta.entries()) keysA.insert(key);
  }
  {
    const levelnet::TrinetCollection tb = levelnet::trinets(b);
    for (const auto& [key, entry] : tb.entries()) keysB.insert(key);
  }
  if (keysA == keysB) {
    std::cout << "equal trinet sets (" << keysA.size() << " distinct)\n";
    return 0;
  }
  int onlyA = 0, onlyB = 0;
  for (const std::string& k : keysA) onlyA += keysB.count(k) ? 0 : 1;
  for (const std::string& k : keysB) onlyB += keysA.count(k) ? 0 : 1;
  std::cout << "different trinet sets (" << onlyA << " only in " << aPath
            << ", " << onlyB << " only in " << bPath << ")\n";
  return 1;
}

int runGen(int leaves, std::uint64_t seed, int levelCap,
           const std::string& outPath) {
  levelnet::RandomNetSpec spec;
  spec.leafCount = leaves;
  spec.reticulationBudget = levelCap;
  spec.seed = seed;
  levelnet::Network net = levelnet::randomLevel2Network(spec);
  writeTextFile(outPath, levelnet::writeENewick(net) + "\n");
  std::cout << "wrote " << outPath << "\n";
  return 0;
}

int runValidate(const std::string& netPath) {
  levelnet::Network net = readNetworkFile(netPath);
  std::vector<std::string> problems = levelnet::validate(net);
  if (problems.empty()) {
    std::cout << "valid: " << net.leafCount() << " leaves, level "
              << levelnet::level(net)
              << (levelnet::isRecoverable(net) ? ", recoverable"
                                               : ", not recoverable")
              << "\n";
    return 0;
  }
  for (const std::string& p : problems) std::cout << p << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-2 phylogenetic network toolkit"};
  app.require_subcommand(1);

  std::string netPath, outPath, aPath, bPath;
  bool includeBinets = false;
  bool wantReport = false;
  int leaves = 0;
  int levelCap = 2;
  std::uint64_t seed = 0;

  CLI::App* extract = app.add_subcommand(
      "extract", "Write the trinets (optionally plus binets) of a network");
  extract->add_option("network", netPath, "extended-Newick network file")
      ->required();
  extract->add_flag("--binets", includeBinets, "include 2-leaf restrictions");
  extract->add_option("-o,--output", outPath, "output trinet list file")
      ->required();

  CLI::App* build = app.add_subcommand(
      "build", "Reconstruct a network from a trinet list file");
  build->add_option("input", netPath, "trinet list file")->required();
  build->add_option("-o,--output", outPath, "output network file")->required();
  build->add_flag("--report", wantReport, "print stage decisions and notes");

  CLI::App* eq =
      app.add_subcommand("eq", "Test two networks for isomorphism");
  eq->add_option("a", aPath, "first network file")->required();
  eq->add_option("b", bPath, "second network file")->required();

  CLI::App* cmp = app.add_subcommand(
      "compare-trinets", "Compare the trinet sets of two networks");
  cmp->add_option("a", aPath, "first network file")->required();
  cmp->add_option("b", bPath, "second network file")->required();

  CLI::App* gen =
      app.add_subcommand("gen", "Generate a seeded random network");
  gen->add_option("--leaves", leaves, "number of leaves (>= 3)")->required();
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--level", levelCap, "maximum reticulations per blob")
      ->check(CLI::Range(0, 2));
  gen->add_option("-o,--output", outPath, "output network file")->required();

  CLI::App* val = app.add_subcommand(
      "validate", "Check the structural invariants of a network file");
  val->add_option("network", netPath, "extended-Newick network file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (extract->parsed()) return runExtract(netPath, includeBinets, outPath);
    if (build->parsed()) return runBuild(netPath, outPath, wantReport);
    if (eq->parsed()) return runEq(aPath, bPath);
    if (cmp->parsed()) return runCompareTrinets(aPath, bPath);
    if (gen->parsed()) return runGen(leaves, seed, levelCap, outPath);
    if (val->parsed()) return runValidate(netPath);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
