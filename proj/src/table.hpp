#pragma once
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ivm {

// Data cell text: 10 significant digits.
std::string format_cell(double x);
// Parameter text: shortest of %.10g / %.17g that parses back to the same bits,
// so specs echoed into sidecar files reproduce runs exactly.
std::string format_exact(double x);

using MetaValue = std::variant<bool, std::int64_t, std::uint64_t, double, std::string>;

// Numeric result table with an optional leading label column and two ordered
// key/value sections: the resolved run configuration and scalar results.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void set_label_column(std::string name);  // before the first row
    void add_row(const std::vector<double>& values);
    void add_row(const std::string& label, const std::vector<double>& values);

    void set_spec(const std::string& key, MetaValue value);
    void set_result(const std::string& key, MetaValue value);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return columns_.size(); }
    const std::string& column_name(std::size_t i) const { return columns_.at(i); }
    double cell(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }
    bool has_labels() const { return !label_name_.empty(); }
    const std::string& label(std::size_t row) const { return labels_.at(row); }

    std::string csv() const;
    std::string meta_json() const;  // {"spec": {...}, "result": {...}}
    std::string doc_json() const;   // meta plus columns and rows in one document

private:
    std::vector<std::string> columns_;
    std::string label_name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> rows_;
    std::vector<std::pair<std::string, MetaValue>> spec_;
    std::vector<std::pair<std::string, MetaValue>> result_;
};

}  // namespace ivm
