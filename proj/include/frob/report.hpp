#ifndef FROB_REPORT_HPP
#define FROB_REPORT_HPP

#include <chrono>
#include <string>

#include "json.hpp"

namespace frob {

using nlohmann::json;

enum class Verdict { Verified, Refuted, Inconclusive, InvalidInstance };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::InvalidInstance: return "invalid-instance";
  }
  return "?";
}

inline Verdict verdict_from_name(const std::string& s) {
  if (s == "verified") return Verdict::Verified;
  if (s == "refuted") return Verdict::Refuted;
  if (s == "inconclusive") return Verdict::Inconclusive;
  if (s == "invalid-instance") return Verdict::InvalidInstance;
  throw std::invalid_argument("unknown verdict: " + s);
}

/// Machine-readable outcome of one named check. Witness polynomials are
/// carried in the text grammar so other tools can re-check them.
struct VerificationReport {
  std::string claim;
  json instance = json::object();
  Verdict verdict = Verdict::Inconclusive;
  json witnesses = json::object();
  json stats = json::object();
  double wall_ms = 0.0;

  /// Timings live under their own key so determinism checks can drop them.
  json to_json(bool with_timings = true) const {
    json j{{"claim", claim},
           {"instance", instance},
           {"verdict", verdict_name(verdict)},
           {"witnesses", witnesses},
           {"stats", stats}};
    if (with_timings) j["timings"] = json{{"wall_ms", wall_ms}};
    return j;
  }

  static VerificationReport from_json(const json& j) {
    VerificationReport r;
    r.claim = j.at("claim").get<std::string>();
    r.instance = j.at("instance");
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    r.witnesses = j.at("witnesses");
    r.stats = j.at("stats");
    if (j.contains("timings")) r.wall_ms = j["timings"].value("wall_ms", 0.0);
    return r;
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace frob

#endif  // FROB_REPORT_HPP
