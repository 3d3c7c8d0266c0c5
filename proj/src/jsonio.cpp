#include "tlf/jsonio.hpp"

#include <string>

#include "tlf/errors.hpp"

namespace tlf {
namespace {

std::string scalar_str(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump(); // numbers, bools, null
}

bool is_matrix(const Json& v) {
    return v.is_array() && !v.empty() && v.front().is_array();
}

bool is_obj_table(const Json& v) {
    return v.is_array() && !v.empty() && v.front().is_object();
}

void text_walk(const Json& v, const std::string& indent, std::string& out) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        const Json& x = it.value();
        if (x.is_object()) {
            out += indent + it.key() + ":\n";
            text_walk(x, indent + "  ", out);
        } else if (is_matrix(x)) {
            out += indent + it.key() + ":\n";
            for (const auto& row : x) {
                out += indent + " ";
                for (const auto& c : row) out += " " + scalar_str(c);
                out += "\n";
            }
        } else if (is_obj_table(x)) {
            out += indent + it.key() + ":\n";
            for (const auto& row : x) {
                out += indent + " ";
                for (auto jt = row.begin(); jt != row.end(); ++jt)
                    out += " " + jt.key() + "=" + scalar_str(jt.value());
                out += "\n";
            }
        } else if (x.is_array()) {
            out += indent + it.key() + ": " + x.dump() + "\n";
        } else {
            out += indent + it.key() + ": " + scalar_str(x) + "\n";
        }
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    return q + "\"";
}

void csv_walk(const Json& doc, const std::string& prefix, std::string& out) {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const Json& x = it.value();
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (x.is_object()) {
            csv_walk(x, key, out);
        } else if (is_matrix(x)) {
            for (const auto& row : x) {
                std::string line;
                for (const auto& c : row) {
                    if (!line.empty()) line += ",";
                    line += csv_quote(scalar_str(c));
                }
                out += line + "\n";
            }
        } else if (is_obj_table(x)) {
            std::string head;
            for (auto jt = x.front().begin(); jt != x.front().end(); ++jt) {
                if (!head.empty()) head += ",";
                head += csv_quote(jt.key());
            }
            out += head + "\n";
            for (const auto& row : x) {
                std::string line;
                for (auto jt = row.begin(); jt != row.end(); ++jt) {
                    if (!line.empty()) line += ",";
                    line += csv_quote(scalar_str(jt.value()));
                }
                out += line + "\n";
            }
        } else if (x.is_array()) {
            std::string line;
            for (const auto& c : x) {
                if (!line.empty()) line += ";";
                line += scalar_str(c);
            }
            out += csv_quote(key) + "," + csv_quote(line) + "\n";
        } else {
            out += csv_quote(key) + "," + csv_quote(scalar_str(x)) + "\n";
        }
    }
}

} // namespace

OutputFormat parse_output_format(const std::string& s) {
    if (s == "json") return OutputFormat::kJson;
    if (s == "csv") return OutputFormat::kCsv;
    if (s == "text") return OutputFormat::kText;
    throw ParseError("unknown output format '" + s + "' (expected json, csv or text)");
}

Json config_json(const Context& ctx) {
    Json c;
    c["p"] = ctx.p;
    c["e"] = ctx.e;
    c["m"] = ctx.m;
    c["t_window"] = std::to_string(ctx.t_lo) + ":" + std::to_string(ctx.t_hi);
    c["pi_window"] = std::to_string(ctx.pi_lo) + ":" + std::to_string(ctx.pi_hi);
    c["seed"] = ctx.seed;
    return c;
}

Json matrix_json(const GfpMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n_rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n_cols; ++j) row.push_back(static_cast<int>(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json envelope(const std::string& cmd, const Context& ctx) {
    Json doc;
    doc["v"] = 1;
    doc["command"] = cmd;
    doc["config"] = config_json(ctx);
    return doc;
}

std::string emit_doc(const Json& doc, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::kJson:
            return doc.dump(2) + "\n";
        case OutputFormat::kText: {
            std::string out;
            text_walk(doc, "", out);
            return out;
        }
        case OutputFormat::kCsv: {
            std::string out;
            csv_walk(doc, "", out);
            return out;
        }
    }
    return {};
}

} // namespace tlf
