#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "adicalg/session.hpp"

namespace {

int error_exit_code(const adicalg::Error& e) {
    switch (e.kind()) {
        case adicalg::ErrorKind::SyntaxError:
        case adicalg::ErrorKind::UnboundName:
        case adicalg::ErrorKind::MissingUniformizer:
            return 2;
        default:
            return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for formal blow-ups over k[w]"};

    std::string file = "-";
    std::string field = "q";
    std::string order = "grevlex";
    std::string uniformizer = "w";
    unsigned degree_bound = 6;
    bool json = false;

    app.add_option("file", file, "session file ('-' for stdin)");
    app.add_option("--field", field, "coefficient field: q or fp:<p>")->capture_default_str();
    app.add_option("--order", order, "groebner display order: grevlex or lex")->capture_default_str();
    app.add_option("--degree-bound", degree_bound, "default normalization degree bound")->capture_default_str();
    app.add_option("--uniformizer", uniformizer, "name of the pseudo-uniformizer variable")->capture_default_str();
    app.add_flag("--json", json, "emit JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        adicalg::SessionOptions opts;
        if (field == "q") {
            opts.field = adicalg::CoeffField::rationals();
        } else if (field.rfind("fp:", 0) == 0) {
            opts.field = adicalg::CoeffField::prime(std::stoul(field.substr(3)));
        } else {
            std::cerr << "error: unknown field '" << field << "'\n";
            return 2;
        }
        if (order == "lex") {
            opts.gb_order = adicalg::MonomialOrder::Kind::Lex;
        } else if (order != "grevlex") {
            std::cerr << "error: unknown order '" << order << "'\n";
            return 2;
        }
        opts.uniformizer = uniformizer;
        opts.degree_bound = degree_bound;
        opts.json = json;

        std::string text;
        if (file == "-") {
            std::stringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot open '" << file << "'\n";
                return 2;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }

        adicalg::Session session = adicalg::parse_session(text);
        adicalg::run_session(session, opts, std::cout);
        return 0;
    } catch (const adicalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return error_exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
