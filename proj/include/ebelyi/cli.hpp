#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ebelyi/belyi.hpp"
#include "ebelyi/error.hpp"

namespace eb {

// Serializable summary of one pipeline run. Field elements are coordinate
// vectors c[2k + e] on the basis t^k j^e of K(t) (j = i or zeta6), written
// as rational strings; polynomial coefficients run from the leading term down.
struct ResultRecord {
  using Element = std::vector<std::string>;
  using Coeffs = std::vector<Element>;

  std::string triple;            // input triple, "(2,4,3) (1,3,4) (1,2,3)"
  std::string canonical;         // canonical representative of its class
  int degree = 0;
  std::string orders;            // "(3,3,3)"
  std::array<std::vector<int>, 3> passport;
  int genus = 0;

  std::string status = "ok";     // "ok", "verification_failed", "error"
  std::string error_kind, error_stage, error_message;

  std::string base;              // "Q(i)" or "Q(zeta6)"
  std::string minpoly;           // over K, empty when the field is K
  std::vector<std::array<std::string, 2>> minpoly_coeffs;  // (a, b) for a + b j, constant term first
  std::string embedding_re, embedding_im;                  // t, 40 digits

  std::optional<std::array<Element, 2>> curve;  // A, B of E(Gamma) for genus 1
  Coeffs phi_num, phi_den;       // genus 0: phi(x) = num / den
  Coeffs phi_n0, phi_n1;         // genus 1: phi = (n0 + n1 y) / den, den in phi_den

  std::array<char, 3> over{'a', 'b', 'c'};  // role over 0, 1, infinity
  std::string relabel = "none";
  bool mirrored = false;

  bool verified = false;
  bool exact = true;
  std::array<std::vector<int>, 3> fibers;
  long ramification_excess = 0;
  bool commutes = false;
  std::string note;

  double millis = 0;  // not serialized unless asked for

  bool operator==(const ResultRecord&) const = default;
};

struct RecordOptions {
  mpfr_prec_t prec = 128;
  bool verify = true;
  bool invert = false;
  std::optional<Case> kase;
};

// Runs the pipeline and captures errors in the record instead of throwing.
ResultRecord make_record(const PermutationTriple& t, const RecordOptions& opt);
ResultRecord record_from_result(const BelyiResult& r);

std::string to_json(const ResultRecord& r, bool with_timing = false);
ResultRecord from_json(const std::string& text);

// Rebuilds the exact field and map of a successful record.
struct RecordMap {
  FieldPtr field;
  std::optional<Curve> curve;
  RatFunc phi;        // genus 0
  CurveFn phi_curve;  // genus 1
};
RecordMap decode_map(const ResultRecord& r);

enum class Format { text, json, latex };
Format parse_format(const std::string& s);
std::string render(const ResultRecord& r, Format f);

// Monic factorization of p into squarefree parts, with linear factors over
// the field of p split off: "(x-8)(x+24)^3". The leading coefficient is
// returned separately.
struct Factored {
  Num lead;
  std::vector<std::pair<Poly, int>> factors;
};
Factored factor_for_display(const Poly& p);
std::string factored_string(const Factored& f, const std::string& var = "x");

// Batch over a list of triples; records come back sorted by (orders,
// degree, canonical triple) whatever the thread schedule.
std::vector<ResultRecord> run_batch(const std::vector<std::pair<PermutationTriple, Case>>& jobs,
                                    const RecordOptions& opt);
std::vector<ResultRecord> run_batch_serial(const std::vector<std::pair<PermutationTriple, Case>>& jobs,
                                           const RecordOptions& opt);

// Appends records to one JSON-lines file per (a,b,c, degree) bucket under
// dir, skipping triples already present. Returns the files touched.
std::vector<std::string> write_buckets(const std::vector<ResultRecord>& records, const std::string& dir);
std::string bucket_name(const ResultRecord& r);

// Process exit code for a set of records: 0 ok, 1 verification failure,
// 2 input error, 3 internal error.
int exit_code(const std::vector<ResultRecord>& records);
int exit_code_for(ErrorKind k);

}  // namespace eb
