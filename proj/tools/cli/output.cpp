#include "cli/output.hpp"

#include <sstream>

#include "confalg/errors.hpp"

namespace confalg::cli {

namespace {

Document betti_document(const BettiTable& table) {
  Document rows = Document::array();
  for (const auto& [key, dim] : table.entries()) {
    rows.push_back({{"degree", key.first}, {"weight", key.second}, {"dim", dim}});
  }
  return rows;
}

void table_rows(std::ostringstream& out, const Document& doc, const std::string& betti_key, const std::string& prefix,
                char sep) {
  for (const auto& card : doc.at("cards")) {
    for (const auto& row : card.at(betti_key)) {
      out << prefix << card.at("k").get<int>() << sep << row.at("degree").get<int>() << sep
          << row.at("weight").get<int>() << sep << row.at("dim").get<std::size_t>() << "\n";
    }
  }
}

}  // namespace

Document meta_document(const SpaceMeta& meta) {
  Document d;
  d["name"] = meta.name;
  d["dimension"] = meta.dimension ? Document(*meta.dimension) : Document(nullptr);
  d["smooth"] = meta.smooth;
  d["proper"] = meta.proper;
  d["connected"] = meta.connected;
  d["unital"] = meta.unital;
  return d;
}

Document result_document(const ConfResult& r, Normalization n) {
  if (n != Normalization::Constant) {
    for (const auto& card : r.cards) {
      if (!card.dualizing) {
        throw Error(ErrorCode::DualizingUnavailable, "dualizing normalization needs a smooth space of known dimension");
      }
    }
  }
  Document doc;
  doc["space"] = meta_document(r.meta);
  doc["normalization"] = std::string(to_string(n));
  const bool graded = r.associated_graded();
  doc["associated_graded"] = graded;
  if (!graded) doc["exact"] = "dimension-forced";
  Document cards = Document::array();
  for (const auto& card : r.cards) {
    Document c;
    c["k"] = card.k;
    c["betti"] = betti_document(n == Normalization::Dualizing ? *card.dualizing : card.constant);
    if (n == Normalization::Both) c["betti_dualizing"] = betti_document(*card.dualizing);
    cards.push_back(std::move(c));
  }
  doc["cards"] = std::move(cards);
  return doc;
}

std::string render_result(const Document& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.dump(2) + "\n";

  const std::string normalization = doc.at("normalization").get<std::string>();
  const bool both = normalization == "both";
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "normalization,k,degree,weight,dim\n";
    if (both) {
      table_rows(out, doc, "betti", "constant,", ',');
      table_rows(out, doc, "betti_dualizing", "dualizing,", ',');
    } else {
      table_rows(out, doc, "betti", normalization + ",", ',');
    }
    return out.str();
  }

  out << "# space: " << doc.at("space").at("name").get<std::string>() << "\n";
  out << "# normalization: " << normalization << "\n";
  out << "# associated_graded: " << (doc.at("associated_graded").get<bool>() ? "true" : "false") << "\n";
  if (doc.contains("exact")) out << "# exact: " << doc.at("exact").get<std::string>() << "\n";
  if (both) {
    out << "normalization\tk\tdegree\tweight\tdim\n";
    table_rows(out, doc, "betti", "constant\t", '\t');
    table_rows(out, doc, "betti_dualizing", "dualizing\t", '\t');
  } else {
    out << "k\tdegree\tweight\tdim\n";
    table_rows(out, doc, "betti", "", '\t');
  }
  return out.str();
}

Document stability_document(const StabilityReport& report, const SpaceMeta& meta, int max_card) {
  Document doc;
  doc["space"] = meta_document(meta);
  doc["note"] = std::string(StabilityReport::kNote);
  doc["case"] = report.curve_case ? "curve" : "higher-dimensional";
  doc["max_card"] = max_card;
  Document rows = Document::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"k", row.k},
                    {"degree", row.degree},
                    {"dim_k", row.dim_k},
                    {"dim_k_plus_1", row.dim_k_plus_1},
                    {"verdict", std::string(to_string(row.verdict))}});
  }
  doc["rows"] = std::move(rows);
  doc["mismatches"] = report.mismatches();
  return doc;
}

std::string render_stability(const Document& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.dump(2) + "\n";
  const char sep = format == OutputFormat::Csv ? ',' : '\t';
  std::ostringstream out;
  if (format == OutputFormat::Table) {
    out << "# space: " << doc.at("space").at("name").get<std::string>() << "\n";
    out << "# case: " << doc.at("case").get<std::string>() << "\n";
    out << "# note: " << doc.at("note").get<std::string>() << "\n";
    out << "# mismatches: " << doc.at("mismatches").get<std::size_t>() << "\n";
  }
  out << "k" << sep << "degree" << sep << "dim_k" << sep << "dim_k_plus_1" << sep << "verdict\n";
  for (const auto& row : doc.at("rows")) {
    out << row.at("k").get<int>() << sep << row.at("degree").get<int>() << sep << row.at("dim_k").get<std::size_t>()
        << sep << row.at("dim_k_plus_1").get<std::size_t>() << sep << row.at("verdict").get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace confalg::cli
