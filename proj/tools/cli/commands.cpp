#include "cli/commands.hpp"

#include <fstream>
#include <sstream>

#include "cli/cache.hpp"
#include "cli/output.hpp"
#include "confalg/conf_space.hpp"
#include "confalg/document.hpp"
#include "confalg/errors.hpp"

namespace confalg::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ValidationFailed: return kValidationFailed;
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateLabel:
    case ErrorCode::UnknownBuiltin:
    case ErrorCode::InvalidParams: return kParseError;
    case ErrorCode::PreconditionFailed:
    case ErrorCode::DualizingUnavailable: return kPreconditionFailed;
    default: return kValidationFailed;
  }
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: ValidationFailed\n";
    for (const auto& d : e.diagnostics()) err << "  " << d.str() << "\n";
    return kValidationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kValidationFailed;
  }
}

std::string generator_key(const GradedSpace& g) {
  std::ostringstream out;
  for (const auto& e : g.basis()) out << e.degree.coh_deg << ":" << e.degree.tate_weight << ";";
  return out.str();
}

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.max_card < 1) throw Error(ErrorCode::InvalidParams, "--max-card must be >= 1");
    const GCAlgebra a = load_input(cfg);
    const GradedSpace generator = resolve_generator(cfg);
    if (cfg.normalization != Normalization::Constant && !(a.meta().smooth && a.meta().dimension)) {
      throw Error(ErrorCode::DualizingUnavailable, "dualizing normalization needs a smooth space of known dimension");
    }

    const auto cache = ResultCache::open(cfg.cache_dir);
    std::string key;
    std::optional<std::string> cached;
    if (cache) {
      key = ResultCache::key_for("compute\n" + serialize(a) + "\nmax_card=" + std::to_string(cfg.max_card) +
                                 "\ngenerator=" + generator_key(generator) +
                                 "\nnormalization=" + std::string(to_string(cfg.normalization)));
      cached = cache->get(key);
    }

    Document doc;
    if (cached) {
      doc = Document::parse(*cached);
    } else {
      doc = result_document(conf_cohomology(a, generator, cfg.max_card), cfg.normalization);
      if (cache) cache->put(key, doc.dump());
    }
    out << render_result(doc, cfg.format);
    return static_cast<int>(kOk);
  });
}

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const GCAlgebra a = parse_document(buffer.str());
    const auto diagnostics = validate(a);
    if (!diagnostics.empty()) throw ValidationError(diagnostics);
    out << "ok: " << a.meta().name << " (" << a.size() << " basis elements)\n";
    return static_cast<int>(kOk);
  });
}

int cmd_stability(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.max_card < 2) throw Error(ErrorCode::InvalidParams, "--max-card must be >= 2 for stability");
    const GCAlgebra a = load_input(cfg);
    const SpaceMeta& meta = a.meta();
    if (!meta.connected) throw Error(ErrorCode::PreconditionFailed, "space is not connected");
    if (!meta.smooth) throw Error(ErrorCode::PreconditionFailed, "space is not smooth");
    if (!meta.dimension) throw Error(ErrorCode::PreconditionFailed, "space has no declared dimension");

    const ConfResult r = conf_cohomology(a, resolve_generator(cfg), cfg.max_card);
    const StabilityReport report = stability_report(r, meta);
    out << render_stability(stability_document(report, meta, cfg.max_card), cfg.format);
    return static_cast<int>(report.mismatches() ? kStabilityMismatch : kOk);
  });
}

}  // namespace confalg::cli
