#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "neighborly/io.hpp"

namespace neighborly {

/// Machine-readable certificate envelope, schema v1. Certificates are
/// self-contained: the instance is embedded, so replay never needs the
/// original input files. Key order is canonical (lexicographic) and
/// runtime_ms is the only nondeterministic field.
struct Certificate {
  Json doc;

  static Certificate make(const std::string& claim, Json instance, Json witness, bool verified,
                          std::uint64_t checked, std::uint64_t total,
                          const std::string& mode = "", std::optional<std::uint64_t> seed = {},
                          bool partial = false) {
    Certificate c;
    c.doc = Json{{"schema", "v1"},
                 {"claim", claim},
                 {"instance", std::move(instance)},
                 {"witness", std::move(witness)},
                 {"verified", verified},
                 {"partial", partial},
                 {"coverage", Json{{"checked", checked}, {"total", total}}},
                 {"runtime_ms", 0}};
    if (!mode.empty()) c.doc["mode"] = mode;
    if (seed) c.doc["seed"] = *seed;
    return c;
  }

  static Certificate from_json(Json j) {
    if (!j.is_object() || j.value("schema", "") != "v1")
      throw input_error("certificate: expected schema v1");
    for (const char* field : {"claim", "instance", "witness", "verified", "coverage"})
      if (!j.contains(field)) throw input_error(std::string("certificate: missing ") + field);
    Certificate c;
    c.doc = std::move(j);
    return c;
  }

  const std::string claim() const { return doc.at("claim").get<std::string>(); }
  bool verified() const { return doc.at("verified").get<bool>(); }
  bool partial() const { return doc.value("partial", false); }
  const Json& instance() const { return doc.at("instance"); }
  const Json& witness() const { return doc.at("witness"); }
  std::uint64_t checked() const { return doc.at("coverage").at("checked").get<std::uint64_t>(); }
  std::uint64_t total() const { return doc.at("coverage").at("total").get<std::uint64_t>(); }

  void set_runtime_ms(std::uint64_t ms) { doc["runtime_ms"] = ms; }

  /// Canonical text, one line. runtime_ms stays in the text; comparisons use
  /// comparable_text().
  std::string to_text() const { return doc.dump(); }

  /// Determinism comparisons: everything except runtime_ms.
  std::string comparable_text() const {
    Json j = doc;
    j.erase("runtime_ms");
    return j.dump();
  }
};

}  // namespace neighborly
