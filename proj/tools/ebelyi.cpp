// Command-line front end: one triple, or every triple of a degree range.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ebelyi/cli.hpp"

using namespace eb;

namespace {

constexpr int kDegreeCap = 64;

// "(2,4,3) (1,3,4) (1,2,3)", "(2,4,3);(1,3,4);(1,2,3)", or three bare cycles
// "(2,4,3)(1,3,4)(1,2,3)".
std::array<std::string, 3> split_triple(const std::vector<std::string>& args) {
  if (args.size() == 3) return {args[0], args[1], args[2]};
  std::string s = args.at(0);
  std::vector<std::string> parts;
  std::regex sep("[^;|\\s]+");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), sep); it != std::sregex_iterator(); ++it)
    parts.push_back(it->str());
  if (parts.size() == 1) {
    parts.clear();
    std::regex cyc("\\([^()]*\\)");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), cyc); it != std::sregex_iterator(); ++it)
      parts.push_back(it->str());
  }
  if (parts.size() != 3)
    throw Error(ErrorKind::ParseError, "expected three permutations, separated by spaces or ';', got \"" + s + "\"");
  return {parts[0], parts[1], parts[2]};
}

int largest_point(const std::array<std::string, 3>& p) {
  int best = 1;
  std::regex num("\\d+");
  for (const auto& s : p)
    for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
      best = std::max(best, std::stoi(it->str()));
  return best;
}

void emit(std::ostream& out, const std::vector<ResultRecord>& recs, Format f, bool timing) {
  for (const auto& r : recs) {
    if (f == Format::json)
      out << to_json(r, timing) << "\n";
    else
      out << render(r, f) << (timing ? "time       " + std::to_string(r.millis) + " ms\n" : "") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belyi maps of Euclidean permutation triples"};
  std::vector<std::string> triple;
  int degree = 0, up_to = 0, jobs = 0;
  std::string orders = "all", format = "text", out_path;
  long prec = 128;
  bool invert = false, no_verify = false, timing = false, serial = false;
  app.add_option("--triple", triple, "sigma_a sigma_b sigma_c in cycle notation")->expected(1, 3);
  app.add_option("--degree", degree, "degree of the triple, or of the batch");
  app.add_option("--orders", orders, "3,3,3 | 2,3,6 | 2,4,4 | all");
  app.add_option("--all-degrees-up-to", up_to, "batch over all degrees 1..D");
  app.add_option("--precision-bits", prec, "starting working precision (>= 64)");
  app.add_option("--format", format, "text | json | latex");
  app.add_flag("--invert", invert, "triple uses the composition convention c b a = 1; invert it");
  app.add_flag("--no-verify", no_verify, "skip ramification and commutativity checks");
  app.add_option("--out", out_path, "output file (single triple) or bucket directory (batch)");
  app.add_option("--jobs", jobs, "worker threads for batches (default: all cores)");
  app.add_flag("--serial", serial, "run batches on the serial reference path");
  app.add_flag("--timing", timing, "include wall-clock time per record");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Format fmt = parse_format(format);
    if (prec < 64) throw Error(ErrorKind::ParseError, "--precision-bits must be at least 64");
    RecordOptions opt;
    opt.prec = prec;
    opt.verify = !no_verify;
    opt.invert = invert;
    std::vector<Case> cases;
    if (orders == "all")
      cases = {Case::k333, Case::k236, Case::k244};
    else
      cases = {parse_case(orders)};

    if (!triple.empty()) {
      if (up_to) throw Error(ErrorKind::ParseError, "--triple and --all-degrees-up-to are exclusive");
      auto parts = split_triple(triple);
      int d = degree ? degree : largest_point(parts);
      if (d > kDegreeCap) throw Error(ErrorKind::ParseError, "degree above the cap of " + std::to_string(kDegreeCap));
      auto t = PermutationTriple::parse(parts[0], parts[1], parts[2], d);
      if (orders != "all") opt.kase = cases[0];
      std::vector<ResultRecord> recs{make_record(t, opt)};
      if (out_path.empty()) {
        emit(std::cout, recs, fmt, timing);
      } else {
        std::ofstream f(out_path);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
        emit(f, recs, fmt, timing);
      }
      if (recs[0].status != "ok") std::cerr << recs[0].error_kind << ": " << recs[0].error_message << "\n";
      return exit_code(recs);
    }

    int lo = degree, hi = degree;
    if (up_to) lo = 1, hi = up_to;
    if (hi < 1) throw Error(ErrorKind::ParseError, "give --triple, --degree or --all-degrees-up-to");
    if (hi > kDegreeCap) throw Error(ErrorKind::ParseError, "degree above the cap of " + std::to_string(kDegreeCap));
    if (invert) throw Error(ErrorKind::ParseError, "--invert applies to --triple only");
    std::vector<std::pair<PermutationTriple, Case>> work;
    for (Case c : cases)
      for (int d = lo; d <= hi; ++d)
        for (auto& t : enumerate_triples(d, c)) work.push_back({t, c});
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif
    auto recs = serial ? run_batch_serial(work, opt) : run_batch(work, opt);
    if (out_path.empty()) {
      emit(std::cout, recs, fmt, timing);
    } else {
      for (const auto& f : write_buckets(recs, out_path)) std::cerr << "wrote " << f << "\n";
    }
    int failed = 0;
    for (const auto& r : recs)
      if (r.status != "ok") ++failed;
    std::cerr << recs.size() << " triples, " << failed << " failed\n";
    return exit_code(recs);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
