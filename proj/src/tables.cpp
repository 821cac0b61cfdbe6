#include "unint/tables.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "unint/closedforms.hpp"
#include "unint/integrals.hpp"

namespace unint {

namespace {

std::string run_label(const std::vector<int>& parts) {
    // Collapse equal parts: 1,1,1 -> 1^3.
    std::string out = "(";
    std::size_t i = 0;
    bool first = true;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!first) out += ",";
        out += std::to_string(parts[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        first = false;
        i = j;
    }
    return out + ")";
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

constexpr std::size_t kLabelWidth = 18;

}  // namespace

std::string class_label(const Partition& c) {
    std::vector<int> parts = c.parts();
    std::sort(parts.begin(), parts.end());
    return run_label(parts);
}

std::string signature_label(const Partition& f) { return run_label(f.parts()); }

std::string render_primitive_table(int pmax) {
    std::ostringstream out;
    out << "Primitive integrals xi[c]\n";
    for (int p = 1; p <= pmax; ++p) {
        out << "p=" << p << "\n";
        auto classes = partitions_of(p);
        std::reverse(classes.begin(), classes.end());
        for (const auto& c : classes)
            out << "  " << pad_right(class_label(c), kLabelWidth) << xi(c).to_string() << "\n";
    }
    return out.str();
}

std::string render_stack_table(int pmax) {
    std::ostringstream out;
    out << "Stack integrals Xi(p1,...,pt)\n";
    for (int p = 1; p <= pmax; ++p) {
        out << "p=" << p << "\n";
        for (const auto& parts : partitions_of(p)) {
            std::vector<long> mults(parts.parts().begin(), parts.parts().end());
            out << "  " << pad_right("Xi(" + parts.to_string() + ")", kLabelWidth)
                << stack_integral(mults).to_string() << "\n";
        }
    }
    return out.str();
}

std::string render_special_double_fan_table(int pmax) {
    std::ostringstream out;
    out << "Special double-fan integrals [Aa]^a[Ab]^a\n";
    for (long alpha = 1; 2 * alpha <= pmax; ++alpha)
        out << "  " << pad_right("alpha=" + std::to_string(alpha), kLabelWidth)
            << special_double_fan(alpha).to_string() << "\n";
    return out.str();
}

std::string render_character_table(int p) {
    CharacterTable table = character_table(p);
    std::size_t label_width = 0;
    for (const auto& f : table.rows)
        label_width = std::max(label_width, signature_label(f).size());
    label_width = std::max(label_width, std::string("class:").size());

    std::vector<std::size_t> col_width(table.cols.size());
    for (std::size_t j = 0; j < table.cols.size(); ++j) {
        col_width[j] = std::max(class_label(table.cols[j]).size(),
                                table.class_sizes[j].get_str().size());
        for (const auto& row : table.entries)
            col_width[j] = std::max(col_width[j], std::to_string(row[j]).size());
    }

    std::ostringstream out;
    out << "Character table S_" << p << "\n";
    out << pad_right("n(c):", label_width);
    for (std::size_t j = 0; j < table.cols.size(); ++j)
        out << "  " << pad_left(table.class_sizes[j].get_str(), col_width[j]);
    out << "\n" << pad_right("class:", label_width);
    for (std::size_t j = 0; j < table.cols.size(); ++j)
        out << "  " << pad_left(class_label(table.cols[j]), col_width[j]);
    out << "\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        out << pad_right(signature_label(table.rows[i]), label_width);
        for (std::size_t j = 0; j < table.cols.size(); ++j)
            out << "  " << pad_left(std::to_string(table.entries[i][j]), col_width[j]);
        out << "\n";
    }
    return out.str();
}

std::string render_all_tables(int pmax) {
    std::ostringstream out;
    out << render_primitive_table(pmax) << "\n";
    out << render_stack_table(pmax) << "\n";
    out << render_special_double_fan_table(pmax) << "\n";
    for (int p = 1; p <= pmax; ++p) out << render_character_table(p) << "\n";
    std::string s = out.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

nlohmann::json tables_json(int pmax) {
    nlohmann::json j;
    j["primitive"] = nlohmann::json::array();
    for (int p = 1; p <= pmax; ++p) {
        nlohmann::json entry{{"p", p}, {"entries", nlohmann::json::array()}};
        auto classes = partitions_of(p);
        std::reverse(classes.begin(), classes.end());
        for (const auto& c : classes)
            entry["entries"].push_back({{"class", c.parts()},
                                        {"value", xi(c).to_json()},
                                        {"pretty", xi(c).to_string()}});
        j["primitive"].push_back(std::move(entry));
    }
    j["stack"] = nlohmann::json::array();
    for (int p = 1; p <= pmax; ++p) {
        nlohmann::json entry{{"p", p}, {"entries", nlohmann::json::array()}};
        for (const auto& parts : partitions_of(p)) {
            std::vector<long> mults(parts.parts().begin(), parts.parts().end());
            RatFunc value = stack_integral(mults);
            entry["entries"].push_back(
                {{"parts", parts.parts()}, {"value", value.to_json()}, {"pretty", value.to_string()}});
        }
        j["stack"].push_back(std::move(entry));
    }
    j["special_double_fan"] = nlohmann::json::array();
    for (long alpha = 1; 2 * alpha <= pmax; ++alpha) {
        RatFunc value = special_double_fan(alpha);
        j["special_double_fan"].push_back(
            {{"alpha", alpha}, {"value", value.to_json()}, {"pretty", value.to_string()}});
    }
    j["characters"] = nlohmann::json::array();
    for (int p = 1; p <= pmax; ++p) {
        CharacterTable table = character_table(p);
        nlohmann::json rows = nlohmann::json::array();
        nlohmann::json cols = nlohmann::json::array();
        nlohmann::json sizes = nlohmann::json::array();
        for (const auto& f : table.rows) rows.push_back(f.parts());
        for (const auto& c : table.cols) cols.push_back(c.parts());
        for (const auto& s : table.class_sizes) sizes.push_back(s.get_str());
        j["characters"].push_back({{"p", p},
                                   {"rows", rows},
                                   {"cols", cols},
                                   {"class_sizes", sizes},
                                   {"entries", table.entries}});
    }
    return j;
}

}  // namespace unint
