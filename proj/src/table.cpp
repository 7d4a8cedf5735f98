#include "table.hpp"
#include "errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace ivm {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string json_number(double x, const std::string& text) {
    return std::isfinite(x) ? text : "null";
}

std::string meta_value_json(const MetaValue& v) {
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* u = std::get_if<std::uint64_t>(&v)) return std::to_string(*u);
    if (const auto* d = std::get_if<double>(&v)) return json_number(*d, format_exact(*d));
    return "\"" + json_escape(std::get<std::string>(v)) + "\"";
}

std::string section_json(const std::vector<std::pair<std::string, MetaValue>>& kv) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : kv) {
        if (!first) out += ", ";
        first = false;
        out += "\"" + json_escape(key) + "\": " + meta_value_json(value);
    }
    out += "}";
    return out;
}

void upsert(std::vector<std::pair<std::string, MetaValue>>& kv, const std::string& key,
            MetaValue value) {
    for (auto& e : kv)
        if (e.first == key) {
            e.second = std::move(value);
            return;
        }
    kv.emplace_back(key, std::move(value));
}

}  // namespace

std::string format_cell(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string format_exact(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    if (std::strtod(buf, nullptr) == x) return buf;
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw param_error("Table: need at least one column");
}

void Table::set_label_column(std::string name) {
    if (!rows_.empty()) throw param_error("Table: label column must precede rows");
    label_name_ = std::move(name);
}

void Table::add_row(const std::vector<double>& values) {
    if (has_labels()) throw param_error("Table: row without label in a labeled table");
    if (values.size() != columns_.size()) throw param_error("Table: row width mismatch");
    rows_.push_back(values);
}

void Table::add_row(const std::string& label, const std::vector<double>& values) {
    if (!has_labels()) throw param_error("Table: labeled row in an unlabeled table");
    if (values.size() != columns_.size()) throw param_error("Table: row width mismatch");
    labels_.push_back(label);
    rows_.push_back(values);
}

void Table::set_spec(const std::string& key, MetaValue value) {
    upsert(spec_, key, std::move(value));
}

void Table::set_result(const std::string& key, MetaValue value) {
    upsert(result_, key, std::move(value));
}

std::string Table::csv() const {
    std::string out;
    if (has_labels()) out += csv_escape(label_name_) + ",";
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ",";
        out += csv_escape(columns_[c]);
    }
    out += "\n";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (has_labels()) out += csv_escape(labels_[r]) + ",";
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c) out += ",";
            out += format_cell(rows_[r][c]);
        }
        out += "\n";
    }
    return out;
}

std::string Table::meta_json() const {
    return "{\"spec\": " + section_json(spec_) + ", \"result\": " + section_json(result_) +
           "}\n";
}

std::string Table::doc_json() const {
    std::string out = "{\"spec\": " + section_json(spec_);
    out += ", \"result\": " + section_json(result_);
    out += ", \"columns\": [";
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ", ";
        out += "\"" + json_escape(columns_[c]) + "\"";
    }
    out += "]";
    if (has_labels()) {
        out += ", \"labels\": [";
        for (std::size_t r = 0; r < labels_.size(); ++r) {
            if (r) out += ", ";
            out += "\"" + json_escape(labels_[r]) + "\"";
        }
        out += "]";
    }
    out += ", \"rows\": [";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c) out += ", ";
            out += json_number(rows_[r][c], format_cell(rows_[r][c]));
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

}  // namespace ivm
