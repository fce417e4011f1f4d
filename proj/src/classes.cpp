#include "perm5/classes.hpp"

#include <sstream>

namespace perm5 {

const std::vector<std::vector<std::string>>& conjecture13_patterns() {
    static const std::vector<std::vector<std::string>> classes = {
        {"45312", "45321", "54312", "54321"},
        {"31245", "32145", "31254", "32154"},
        {"31425", "32415", "31524", "32514"},
        {"41325", "51324", "42315", "52314"},
        {"13425", "23415", "13524", "23514"},
        {"13452", "23451", "13542", "23541"},
        {"24513", "25413", "24531", "25431"},
        {"13245", "23145", "13254", "23154"},
        {"32415", "34215", "32451", "34251"},
        {"21345", "23145", "23154", "21354"},
        {"24135", "25134", "25314", "24315"},
        {"42513", "52413", "42531", "52431"},
        {"42135", "52134", "52314", "42315"},
    };
    return classes;
}

const std::vector<NamedClass>& named_classes() {
    static const std::vector<NamedClass> classes = [] {
        std::vector<NamedClass> out;
        const auto& conj = conjecture13_patterns();
        for (size_t i = 0; i < conj.size(); ++i) {
            std::string cat, csv;
            for (size_t j = 0; j < conj[i].size(); ++j) {
                cat += conj[i][j];
                if (j) csv += ',';
                csv += conj[i][j];
            }
            out.push_back({"C" + cat, csv});
            out.push_back({"conj" + std::to_string(i + 1), csv});
        }
        out.push_back({"C31243214", "3124,3214"});
        out.push_back({"C31423241", "3142,3241"});
        out.push_back({"I201210", ""});
        return out;
    }();
    return classes;
}

bool is_inversion_class_alias(const std::string& name) { return name == "I201210"; }

std::optional<PatternSet> lookup_class(const std::string& name) {
    for (const NamedClass& c : named_classes())
        if (c.name == name && !c.patterns_csv.empty())
            return PatternSet::parse(c.patterns_csv);
    return std::nullopt;
}

}  // namespace perm5
