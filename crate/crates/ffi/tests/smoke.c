#include <stdio.h>
#include <string.h>

#include "mine.h"

int main(void) {
    const char *text = "MINE 1\nnodes 2\nlabels 2\nunary 0 0 3\nedge 0 1 0 1 1 0\n";
    MineInstance *inst = NULL;
    if (mine_instance_parse(text, &inst) != MINE_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", mine_last_error());
        return 1;
    }
    size_t labels[2];
    int64_t value = -1;
    bool infinite = true;
    if (mine_solve(inst, MINE_METHOD_MINCUT, labels, 2, &value, &infinite) != MINE_STATUS_OK) {
        fprintf(stderr, "solve: %s\n", mine_last_error());
        return 1;
    }
    printf("value %lld labels %zu %zu\n", (long long)value, labels[0], labels[1]);
    if (mine_instance_parse("MINE 2\n", &inst) != MINE_STATUS_PARSE || mine_last_error() == NULL) {
        return 1;
    }
    mine_instance_free(inst);
    return 0;
}
