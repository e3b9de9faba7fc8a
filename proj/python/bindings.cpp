#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isoclinic/oracle.hpp"
#include "isoclinic/report.hpp"

namespace py = pybind11;
using namespace isoc;

namespace {

BraidSpec spec_of(const std::string& slope, const std::vector<int>& word, int power) {
    if (slope.empty() == word.empty()) throw std::invalid_argument("give exactly one of slope or word");
    if (!slope.empty()) return BraidSpec::springer(Slope::parse(slope));
    return BraidSpec::general(word, power);
}

std::string label_of(const std::string& type, int gl) { return gl ? "A" + std::to_string(gl - 1) : type; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Braid stack point counts over unipotent classes";

    py::register_exception<TierUnavailable>(m, "TierUnavailable");

    m.def("count_json", [](const std::string& type, const std::string& slope, const std::vector<int>& word,
                           int power, int gl, const std::string& data_dir) {
        auto ctx = make_context(label_of(type, gl), gl > 0, data_dir);
        return count_report(*ctx, spec_of(slope, word, power)).dump();
    }, py::arg("type") = "", py::arg("slope") = "", py::arg("word") = std::vector<int>{}, py::arg("power") = 1,
       py::arg("gl") = 0, py::arg("data_dir") = "");

    m.def("interval_json", [](const std::string& type, const std::string& slope, const std::vector<int>& word,
                              int power, int gl, const std::string& data_dir) {
        auto ctx = make_context(label_of(type, gl), gl > 0, data_dir);
        return interval_report(*ctx, spec_of(slope, word, power)).dump();
    }, py::arg("type") = "", py::arg("slope") = "", py::arg("word") = std::vector<int>{}, py::arg("power") = 1,
       py::arg("gl") = 0, py::arg("data_dir") = "");

    m.def("count_min_json", [](const std::string& type, const std::string& slope, int gl,
                               const std::string& data_dir) {
        auto ctx = make_context(label_of(type, gl), gl > 0, data_dir);
        return count_min_report(*ctx, Slope::parse(slope)).dump();
    }, py::arg("type") = "", py::arg("slope"), py::arg("gl") = 0, py::arg("data_dir") = "");

    m.def("springer_json", [](const std::string& type) { return springer_report(type).dump(); });
    m.def("validate_json", [](const std::string& type, const std::string& data_dir) {
        return validate_report(type, data_dir).dump();
    }, py::arg("type"), py::arg("data_dir") = "");
    m.def("oracle_json", [](int n, int q, const std::string& slope, const std::vector<int>& word, int power) {
        return oracle_report(n, q, spec_of(slope, word, power)).dump();
    }, py::arg("n"), py::arg("q"), py::arg("slope") = "", py::arg("word") = std::vector<int>{},
       py::arg("power") = 1);
    m.def("coxeter_json", [](int n) { return coxeter_report(n).dump(); });
    m.def("render", [](const std::string& report, const std::string& format) {
        return render(json::parse(report), format);
    });

    m.def("normal_form", [](const std::string& type, const std::vector<int>& word) {
        RootSystem rs = RootSystem::build(type);
        std::vector<std::vector<int>> out;
        for (auto& s : normal_form(rs, word).simples) out.push_back(rs.reduced_word(s));
        return out;
    });
    m.def("root_elements", [](const std::string& type, int m_) {
        RootSystem rs = RootSystem::build(type);
        std::vector<std::vector<int>> out;
        for (auto& w : find_root_elements(rs, m_)) out.push_back(rs.reduced_word(w));
        return out;
    });
    m.def("chamber_check", [](const std::string& type, const std::vector<int>& word, int m_) {
        RootSystem rs = RootSystem::build(type);
        return springer_chamber_check(rs, rs.from_word(word), m_);
    });
    m.def("stack_count_bruteforce", [](int n, int q, const std::vector<int>& word, const Partition& mu) {
        return rational_str(oracle::stack_count_bruteforce(n, q, word, mu));
    });
}
