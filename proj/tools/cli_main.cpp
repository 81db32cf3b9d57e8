#include "stepswitch.h"
int main(){ return ss_version() ? 0 : 1; }
