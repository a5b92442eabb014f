#include <cstdio>

int main() {
    std::printf("teachdim cli placeholder\n");
    return 2;
}
