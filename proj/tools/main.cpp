#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "io.hpp"
#include "toric/intvec.hpp"
#include "toric/lift.hpp"
#include "toric/verify.hpp"
#include "toric/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Markov, Groebner and Graver bases via lifting and toric fiber products"};
    app.set_version_flag("--version", toric::version);
    std::function<int()> action;
    cli::register_commands(app, action);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::ok : cli::usage;
    }
    try {
        return action();
    } catch (const toric::holes_found& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::verification_failed;
    } catch (const toric::resource_guard& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return cli::resource;
    } catch (const cli::write_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::resource;
    } catch (const toric::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::usage;
    }
}
