# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernel.

Exact mirror of _bb_py: same search tree, same node accounting, same
results — tests compare the two backends instance by instance.  See
_bb_py for the algorithm description.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

DEFAULT_NODE_BUDGET = 50_000_000


cdef inline int _bs_lowest(uint64_t* bs, int words) nogil:
    cdef int w
    for w in range(words):
        if bs[w]:
            return (w << 6) + __builtin_ctzll(bs[w])
    return -1


cdef inline int _bs_popcount(uint64_t* bs, int words) nogil:
    cdef int w, c = 0
    for w in range(words):
        c += __builtin_popcountll(bs[w])
    return c


cdef inline bint _bs_empty(uint64_t* bs, int words) nogil:
    cdef int w
    for w in range(words):
        if bs[w]:
            return 0
    return 1


cdef inline bint _bs_subset(uint64_t* a, uint64_t* b, int words) nogil:
    # a subset of b
    cdef int w
    for w in range(words):
        if a[w] & ~b[w]:
            return 0
    return 1


cdef struct Ctx:
    int n
    int words
    uint64_t* masks
    uint64_t* rows        # n * words compatibility bitsets
    uint64_t* byv         # 64 * words membership bitsets
    uint64_t* pools       # (n + 2) * words per-depth candidate sets
    uint64_t* scr_a       # per-depth scratch (coloring)
    uint64_t* scr_b
    uint64_t* scr_c       # per-depth scratch (find-mode iteration)
    int* path
    int* witness
    int witness_len
    int best
    int64_t nodes
    int64_t budget
    bint aborted
    # find mode
    int target
    bint require_empty
    int* found
    bint has_found


cdef int _ctx_init(Ctx* ctx, list masks, int64_t budget) except -1:
    cdef int n = len(masks)
    cdef int words = (n + 63) >> 6
    if words == 0:
        words = 1
    ctx.n = n
    ctx.words = words
    ctx.nodes = 0
    ctx.budget = budget
    ctx.aborted = 0
    ctx.witness_len = 0
    ctx.has_found = 0
    ctx.masks = <uint64_t*> malloc(n * sizeof(uint64_t))
    ctx.rows = <uint64_t*> calloc(<size_t> n * words, sizeof(uint64_t))
    ctx.byv = <uint64_t*> calloc(64 * words, sizeof(uint64_t))
    ctx.pools = <uint64_t*> calloc(<size_t> (n + 2) * words, sizeof(uint64_t))
    ctx.scr_a = <uint64_t*> calloc(<size_t> (n + 2) * words, sizeof(uint64_t))
    ctx.scr_b = <uint64_t*> calloc(<size_t> (n + 2) * words, sizeof(uint64_t))
    ctx.scr_c = <uint64_t*> calloc(<size_t> (n + 2) * words, sizeof(uint64_t))
    ctx.path = <int*> malloc((n + 2) * sizeof(int))
    ctx.witness = <int*> malloc((n + 2) * sizeof(int))
    ctx.found = <int*> malloc((n + 2) * sizeof(int))
    if (ctx.masks == NULL or ctx.rows == NULL or ctx.byv == NULL
            or ctx.pools == NULL or ctx.scr_a == NULL or ctx.scr_b == NULL
            or ctx.scr_c == NULL or ctx.path == NULL or ctx.witness == NULL
            or ctx.found == NULL):
        _ctx_free(ctx)
        raise MemoryError("kernel workspace allocation failed")
    cdef int i, b
    cdef uint64_t m
    for i in range(n):
        ctx.masks[i] = <uint64_t> masks[i]
    for i in range(n):
        m = ctx.masks[i]
        while m:
            b = __builtin_ctzll(m)
            ctx.byv[b * words + (i >> 6)] |= (<uint64_t> 1) << (i & 63)
            m &= m - 1
    cdef int w
    for i in range(n):
        m = ctx.masks[i]
        while m:
            b = __builtin_ctzll(m)
            for w in range(words):
                ctx.rows[i * words + w] |= ctx.byv[b * words + w]
            m &= m - 1
        ctx.rows[i * words + (i >> 6)] &= ~((<uint64_t> 1) << (i & 63))
    return 0


cdef void _ctx_free(Ctx* ctx) nogil:
    free(ctx.masks)
    free(ctx.rows)
    free(ctx.byv)
    free(ctx.pools)
    free(ctx.scr_a)
    free(ctx.scr_b)
    free(ctx.scr_c)
    free(ctx.path)
    free(ctx.witness)
    free(ctx.found)


cdef void _expand(Ctx* ctx, int depth, int size) nogil:
    cdef int words = ctx.words
    cdef uint64_t* pool = ctx.pools + depth * words
    cdef uint64_t* uncolored = ctx.scr_a + depth * words
    cdef uint64_t* avail = ctx.scr_b + depth * words
    cdef uint64_t* child = ctx.pools + (depth + 1) * words
    cdef int* order
    cdef int* colors
    cdef int cnt, k, color, v, idx, w

    ctx.nodes += 1
    if ctx.nodes > ctx.budget:
        ctx.aborted = 1
        return

    cnt = _bs_popcount(pool, words)
    order = <int*> malloc(cnt * sizeof(int))
    colors = <int*> malloc(cnt * sizeof(int))
    if order == NULL or colors == NULL:
        free(order)
        free(colors)
        ctx.aborted = 1
        return

    memcpy(uncolored, pool, words * sizeof(uint64_t))
    k = 0
    color = 0
    while not _bs_empty(uncolored, words):
        color += 1
        memcpy(avail, uncolored, words * sizeof(uint64_t))
        while True:
            v = _bs_lowest(avail, words)
            if v < 0:
                break
            order[k] = v
            colors[k] = color
            k += 1
            for w in range(words):
                avail[w] &= ~ctx.rows[v * words + w]
            avail[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
            uncolored[v >> 6] &= ~((<uint64_t> 1) << (v & 63))

    for idx in range(k - 1, -1, -1):
        if ctx.aborted:
            break
        if size + colors[idx] <= ctx.best:
            break
        v = order[idx]
        for w in range(words):
            child[w] = pool[w] & ctx.rows[v * words + w]
        ctx.path[size] = v
        if not _bs_empty(child, words):
            _expand(ctx, depth + 1, size + 1)
        elif size + 1 > ctx.best:
            ctx.best = size + 1
            ctx.witness_len = size + 1
            memcpy(ctx.witness, ctx.path, (size + 1) * sizeof(int))
        pool[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
    free(order)
    free(colors)


cdef int _color_count(Ctx* ctx, uint64_t* pool, int depth) nogil:
    cdef int words = ctx.words
    cdef uint64_t* uncolored = ctx.scr_a + depth * words
    cdef uint64_t* avail = ctx.scr_b + depth * words
    cdef int count = 0, v, w
    memcpy(uncolored, pool, words * sizeof(uint64_t))
    while not _bs_empty(uncolored, words):
        count += 1
        memcpy(avail, uncolored, words * sizeof(uint64_t))
        while True:
            v = _bs_lowest(avail, words)
            if v < 0:
                break
            for w in range(words):
                avail[w] &= ~ctx.rows[v * words + w]
            avail[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
            uncolored[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
    return count


cdef void _dfs(Ctx* ctx, int depth, uint64_t common) nogil:
    cdef int words = ctx.words
    cdef uint64_t* pool = ctx.pools + depth * words
    cdef uint64_t* child = ctx.pools + (depth + 1) * words
    cdef uint64_t* it = ctx.scr_c + depth * words
    cdef uint64_t cm
    cdef int need, v, b, w, vw, vb

    ctx.nodes += 1
    if ctx.nodes > ctx.budget:
        ctx.aborted = 1
        return
    need = ctx.target - depth
    if need == 0:
        if (not ctx.require_empty) or common == 0:
            memcpy(ctx.found, ctx.path, depth * sizeof(int))
            ctx.has_found = 1
        return
    if _bs_popcount(pool, words) < need:
        return
    if _color_count(ctx, pool, depth) < need:
        return
    if ctx.require_empty and common:
        cm = common
        while cm:
            b = __builtin_ctzll(cm)
            if _bs_subset(pool, ctx.byv + b * words, words):
                return
            cm &= cm - 1
    memcpy(it, pool, words * sizeof(uint64_t))
    while True:
        v = _bs_lowest(it, words)
        if v < 0:
            return
        vw = v >> 6
        vb = v & 63
        for w in range(words):
            child[w] = pool[w] & ctx.rows[v * words + w]
        # keep only candidates with index > v
        for w in range(vw):
            child[w] = 0
        if vb == 63:
            child[vw] = 0
        else:
            child[vw] &= ~(((<uint64_t> 1) << (vb + 1)) - 1)
        ctx.path[depth] = v
        _dfs(ctx, depth + 1, common & ctx.masks[v])
        if ctx.has_found or ctx.aborted:
            return
        it[vw] &= ~((<uint64_t> 1) << vb)


def max_clique(masks, lower_bound=0, node_budget=DEFAULT_NODE_BUDGET):
    """See _bb_py.max_clique; identical contract and search tree."""
    cdef list ms = list(masks)
    cdef int n = len(ms)
    if n == 0:
        return lower_bound, None, 0, True
    cdef Ctx ctx
    _ctx_init(&ctx, ms, <int64_t> node_budget)
    ctx.best = lower_bound
    cdef int i
    cdef uint64_t* root = ctx.pools
    for i in range(n):
        root[i >> 6] |= (<uint64_t> 1) << (i & 63)
    _expand(&ctx, 0, 0)
    witness = None
    if ctx.witness_len > 0:
        witness = sorted(ctx.witness[i] for i in range(ctx.witness_len))
    out = (ctx.best, witness, ctx.nodes, not ctx.aborted)
    _ctx_free(&ctx)
    return out


def find_clique(masks, target, node_budget=DEFAULT_NODE_BUDGET, require_empty_common=False):
    """See _bb_py.find_clique; identical contract and search tree."""
    cdef list ms = list(masks)
    cdef int n = len(ms)
    cdef int tgt = target
    if tgt == 0:
        return [], 0, True
    if tgt > n:
        return None, 0, True
    cdef Ctx ctx
    _ctx_init(&ctx, ms, <int64_t> node_budget)
    ctx.target = tgt
    ctx.require_empty = 1 if require_empty_common else 0
    ctx.best = 0
    cdef int i
    cdef uint64_t* root = ctx.pools
    for i in range(n):
        root[i >> 6] |= (<uint64_t> 1) << (i & 63)
    cdef uint64_t common = <uint64_t> 0xFFFFFFFFFFFFFFFF if require_empty_common else 0
    _dfs(&ctx, 0, common)
    found = None
    if ctx.has_found:
        found = [ctx.found[i] for i in range(tgt)]
    out = (found, ctx.nodes, not ctx.aborted)
    _ctx_free(&ctx)
    return out
