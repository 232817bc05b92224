#include <iostream>

int main() {
    std::cout << "hankelbound cli placeholder\n";
    return 0;
}
