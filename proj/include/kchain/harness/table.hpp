#pragma once

// Renders Kf(G_n) and Kf*(G_n) tables in the 2-decimal display of the
// published tables, flagging cells where the printed value disagrees with
// the formula.

#include <sstream>
#include <string>

#include "kchain/closed_forms.hpp"
#include "kchain/errors.hpp"
#include "kchain/harness/serialize.hpp"

namespace kchain::harness {

enum class TableKind { Kf, KfStar };
enum class OutputFormat { Text, Csv, Json };

inline constexpr int kMaxTableN = 10000;

inline TableKind parse_table_kind(const std::string& s) {
  if (s == "kf") return TableKind::Kf;
  if (s == "kfstar") return TableKind::KfStar;
  throw InvalidArgument("unknown table kind '" + s + "' (expected kf or kfstar)");
}

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw InvalidArgument("unknown format '" + s + "' (expected text, csv or json)");
}

struct TableCell {
  int n;
  Rational value;
  std::string display;                  ///< what the row shows
  std::optional<std::string> printed;   ///< printed value when it is a known erratum
};

inline TableCell table_cell(TableKind kind, int n, bool as_printed) {
  TableCell cell{n, kind == TableKind::Kf ? kf_gn(n) : kfstar_gn(n), {}, std::nullopt};
  cell.display = display2(cell.value);
  cell.printed = kind == TableKind::Kf ? printed_kf_erratum(n) : printed_kfstar_erratum(n);
  if (as_printed && cell.printed) cell.display = *cell.printed;
  return cell;
}

inline std::string render_table(TableKind kind, int from, int to, OutputFormat format, bool as_printed = false) {
  if (from < 1 || to > kMaxTableN || from > to) {
    throw InvalidArgument("table range must satisfy 1 <= from <= to <= " + std::to_string(kMaxTableN));
  }
  const std::string label = kind == TableKind::Kf ? "Kf(G_n)" : "Kf*(G_n)";
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text: {
      out << "# n\t" << label << '\n';
      for (int n = from; n <= to; ++n) {
        const TableCell c = table_cell(kind, n, as_printed);
        out << "G_" << n << '\t' << c.display;
        if (c.printed) {
          if (as_printed) out << "\t[as printed; formula gives " << display2(c.value) << "]";
          else out << "\t[erratum: printed " << *c.printed << "]";
        }
        out << '\n';
      }
      break;
    }
    case OutputFormat::Csv: {
      out << "n,value,display,erratum_printed\n";
      for (int n = from; n <= to; ++n) {
        const TableCell c = table_cell(kind, n, as_printed);
        out << n << ',' << to_string(c.value) << ',' << c.display << ',' << c.printed.value_or("") << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      json rows = json::array();
      for (int n = from; n <= to; ++n) {
        const TableCell c = table_cell(kind, n, as_printed);
        json row{{"n", n}, {"value", to_string(c.value)}, {"display", c.display}};
        if (c.printed) row["erratum"] = json{{"printed", *c.printed}, {"computed", display2(c.value)}};
        rows.push_back(row);
      }
      out << json{{"table", kind == TableKind::Kf ? "kf" : "kfstar"}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace kchain::harness
