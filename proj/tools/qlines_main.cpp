#include <cstdio>

int main() {
    std::puts("qlines: command-line interface under construction");
    return 0;
}
