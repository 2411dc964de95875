#include <cstdio>
int main(int argc, char** argv) { (void)argc; (void)argv; std::fputs("exlie: not yet implemented\n", stderr); return 2; }
