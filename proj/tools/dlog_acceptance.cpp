// Runs the ten acceptance criteria, one line each. Exit status 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <dlog/acceptance.hpp>

int main(int argc, char **argv)
{
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        try {
            ids.push_back(std::stoi(argv[i]));
        } catch (const std::exception &) {
            std::cerr << "usage: " << argv[0] << " [criterion ids 1..10]\n";
            return 2;
        }
    }
    auto results = dlog::acceptance::run(ids, [](const dlog::acceptance::Result &r) {
        std::cout << dlog::acceptance::format_line(r) << std::endl;
    });
    int failed = 0;
    for (const auto &r : results) {
        failed += r.pass ? 0 : 1;
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
