// brep: exact irreducible representations of the finite braid quotients
// (Z/q)^n x| S_n for odd q, evaluated over Q(eps_q).
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 unsupported input, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "brep/json_io.hpp"
#include "brep/verification.hpp"

namespace {

using brep::json;

struct Options {
    int n = 0;
    int q = 0;
    std::int64_t cap = 1'000'000;
    bool pretty = false;
    std::string out;
    std::string label_json;
    std::string elements_json;
    std::string word;
};

void emit(const json& j, const Options& opt) {
    std::string text = opt.pretty ? j.dump(2) : j.dump();
    if (opt.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(opt.out);
        f << text << "\n";
    }
}

void require_odd_q(int q) {
    if (q % 2 == 0) throw brep::UnsupportedCase("q must be odd");
}

std::vector<int> parse_braid_word(const std::string& word) {
    std::vector<int> out;
    std::istringstream is(word);
    std::string tok;
    int pos = 0;
    while (is >> tok) {
        ++pos;
        bool inv = false;
        std::string body = tok;
        if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
            inv = true;
            body = body.substr(0, body.size() - 3);
        }
        if (body.size() < 2 || body[0] != 's')
            throw std::invalid_argument("braid word: bad token '" + tok +
                                        "' at position " + std::to_string(pos));
        int idx;
        try {
            std::size_t used;
            idx = std::stoi(body.substr(1), &used);
            if (used != body.size() - 1) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("braid word: bad token '" + tok +
                                        "' at position " + std::to_string(pos));
        }
        out.push_back(inv ? -idx : idx);
    }
    return out;
}

brep::Irrep make_irrep(const brep::BraidQuotient& group, const Options& opt) {
    json j;
    try {
        j = json::parse(opt.label_json);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("--label: invalid JSON: ") + e.what());
    }
    brep::IrrepLabel label = brep::label_from_json(j);
    auto labels = brep::enumerate_labels(group.n(), group.q(), opt.cap);
    for (auto& known : labels)
        if (known == label) return brep::Irrep(group, label);
    std::ostringstream msg;
    msg << "unknown label; valid labels for n=" << group.n() << " q=" << group.q()
        << ":";
    for (auto& known : labels) msg << " " << brep::to_json(known).dump();
    throw std::invalid_argument(msg.str());
}

int cmd_enumerate(const Options& opt) {
    require_odd_q(opt.q);
    brep::BraidQuotient group(opt.n, opt.q, opt.cap);
    json groups = json::array();
    std::map<int, std::int64_t> census;
    std::int64_t total = 0, sumsq = 0;
    std::vector<int> cur_lambda;
    json* cur = nullptr;
    for (auto& irr : brep::enumerate_irreps(group)) {
        const auto& lambda = irr.label().lambda.parts;
        if (cur == nullptr || lambda != cur_lambda) {
            groups.push_back(json{{"lambda", lambda}, {"irreps", json::array()}});
            cur = &groups.back();
            cur_lambda = lambda;
        }
        (*cur)["irreps"].push_back(
            json{{"label", brep::to_json(irr.label())}, {"dim", irr.dim()}});
        ++census[irr.dim()];
        ++total;
        sumsq += static_cast<std::int64_t>(irr.dim()) * irr.dim();
    }
    json census_json = json::object();
    for (auto& [d, c] : census) census_json[std::to_string(d)] = c;
    emit(json{{"n", opt.n},
              {"q", opt.q},
              {"group_order", group.order()},
              {"irrep_count", total},
              {"dimension_census", census_json},
              {"sum_dim_squares", sumsq},
              {"by_lambda", groups}},
         opt);
    return 0;
}

int cmd_matrices(const Options& opt) {
    require_odd_q(opt.q);
    brep::BraidQuotient group(opt.n, opt.q, opt.cap);
    brep::Irrep irr = make_irrep(group, opt);
    std::vector<brep::GroupElement> elements;
    if (opt.elements_json.empty()) {
        for (int s = 1; s <= opt.n - 1; ++s)
            elements.push_back(group.braid_generator_image(s));
    } else {
        for (auto& je : json::parse(opt.elements_json))
            elements.push_back(brep::group_element_from_json(je, opt.n, opt.q));
    }
    json out = json::array();
    for (auto& g : elements)
        out.push_back(json{{"g", brep::to_json(g)},
                           {"matrix", brep::to_json(irr.evaluate(g))}});
    emit(json{{"n", opt.n},
              {"q", opt.q},
              {"label", brep::to_json(irr.label())},
              {"dim", irr.dim()},
              {"matrices", out}},
         opt);
    return 0;
}

int cmd_character_table(const Options& opt) {
    require_odd_q(opt.q);
    brep::BraidQuotient group(opt.n, opt.q, opt.cap);
    auto table = brep::compute_character_table(group);
    json classes = json::array();
    for (auto& cls : table.classes)
        classes.push_back(json{{"rep", brep::to_json(cls.rep)}, {"size", cls.size}});
    json rows = json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        json vals = json::array();
        for (auto& v : table.rows[i]) vals.push_back(brep::to_json(v));
        rows.push_back(json{{"label", brep::to_json(table.labels[i])},
                            {"dim", table.dims[i]},
                            {"values", vals}});
    }
    json out{{"n", opt.n}, {"q", opt.q}, {"classes", classes}, {"rows", rows}};
    emit(out, opt);
    if (opt.pretty) {
        // aligned text rendering on stderr, the JSON stays on stdout
        std::ostringstream os;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            os << "chi_" << i << ":";
            for (auto& v : table.rows[i]) {
                std::ostringstream cell;
                bool first = true;
                for (auto& c : v.coeffs()) {
                    if (!first) cell << ",";
                    cell << brep::rat_to_string(c);
                    first = false;
                }
                os << " [" << cell.str() << "]";
            }
            os << "\n";
        }
        std::cerr << os.str();
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    require_odd_q(opt.q);
    brep::VerifyReport rep = brep::verify(opt.n, opt.q, opt.cap);
    emit(brep::to_json(rep), opt);
    return rep.passed() ? 0 : 1;
}

int cmd_braid_eval(const Options& opt) {
    require_odd_q(opt.q);
    brep::BraidQuotient group(opt.n, opt.q, opt.cap);
    brep::Irrep irr = make_irrep(group, opt);
    std::vector<int> word = parse_braid_word(opt.word);
    for (int t : word)
        if (std::abs(t) > opt.n - 1)
            throw std::invalid_argument("braid word: generator index out of range");
    brep::GroupElement g = group.braid_word_eval(word);
    emit(json{{"n", opt.n},
              {"q", opt.q},
              {"label", brep::to_json(irr.label())},
              {"word", opt.word},
              {"group_element", brep::to_json(g)},
              {"matrix", brep::to_json(irr.evaluate(g))}},
         opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact irreducible representations of finite braid quotients"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_label, bool with_word) {
        sub->add_option("--n", opt.n, "number of strands")->required();
        sub->add_option("--q", opt.q, "order of the cyclic factor (odd)")->required();
        sub->add_option("--cap", opt.cap, "enumeration cap on the group order");
        sub->add_flag("--pretty", opt.pretty, "indented JSON output");
        sub->add_option("--out", opt.out, "write output to a file instead of stdout");
        if (with_label)
            sub->add_option("--label", opt.label_json, "irrep label as JSON")->required();
        if (with_word)
            sub->add_option("--word", opt.word, "braid word, e.g. \"s1 s2^-1 s1\"")
                ->required();
    };

    auto* enumerate = app.add_subcommand("enumerate", "list all irreducible representations");
    add_common(enumerate, false, false);
    auto* matrices = app.add_subcommand("matrices", "matrices of one irrep at given elements");
    add_common(matrices, true, false);
    matrices->add_option("--elements", opt.elements_json,
                         "JSON array of group elements (default: braid generators)");
    auto* chartab = app.add_subcommand("character-table", "full character table");
    add_common(chartab, false, false);
    auto* verify = app.add_subcommand("verify", "run the full verification battery");
    add_common(verify, false, false);
    auto* braid = app.add_subcommand("braid-eval", "evaluate a braid word in one irrep");
    add_common(braid, true, true);

    try {
        app.parse(argc, argv);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (matrices->parsed()) return cmd_matrices(opt);
        if (chartab->parsed()) return cmd_character_table(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (braid->parsed()) return cmd_braid_eval(opt);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const brep::UnsupportedCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const brep::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
