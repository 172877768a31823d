def _reachable(producers):
    '''
    Returns the nodes reachable from ``producers``, in discovery order.
    '''
    seen = []
    marked = set()
    stack = list(reversed(producers))
    while stack:
        v = stack.pop()
        if v in marked:
            continue
        marked.add(v)
        seen.append(v)
        for child in sorted(v.children or (), key = lambda c: c.id, reverse = True):
            if child not in marked:
                stack.append(child)
    return seen

def _in_degrees(nodes):
    degrees = {v: 0 for v in nodes}
    for v in nodes:
        for child in v.children or ():
            degrees[child] = degrees.get(child, 0) + 1
    return degrees

def has_cycle(producers) -> bool:
    '''
    Returns True if the graph reachable from ``producers`` has a cycle.
    A graph is acyclic exactly when repeatedly removing nodes with no remaining
    parents empties it.
    '''
    nodes = _reachable(producers)
    degrees = _in_degrees(nodes)
    ready = [v for v in nodes if degrees[v] == 0]
    removed = 0
    while ready:
        v = ready.pop()
        removed += 1
        for child in v.children or ():
            degrees[child] -= 1
            if degrees[child] == 0:
                ready.append(child)
    return removed != len(nodes)

def topological_sort(producers) -> list:
    '''
    Creates a topological sort of the computation graph.

    - Arguments:
        - producers: a list of producer nodes, that is, nodes with no parents.

    - Returns:
        - a list of nodes in topological order.  If *node A* appears before \
            *node B* on the list, then *node A* does not depend on the output \
            of *node B*. Ties are broken by discovery order so the sort is \
            deterministic.

    - Raises:
        - ``ValueError`` if the graph has a cycle
    '''
    nodes = _reachable(producers)
    order = {v: i for i, v in enumerate(nodes)}
    degrees = _in_degrees(nodes)
    ready = [v for v in nodes if degrees[v] == 0]
    result = []
    while ready:
        ready.sort(key = lambda v: order[v], reverse = True)
        v = ready.pop()
        result.append(v)
        for child in v.children or ():
            degrees[child] -= 1
            if degrees[child] == 0:
                ready.append(child)
    if len(result) != len(nodes):
        raise ValueError('Cycle found in graph')
    return result
