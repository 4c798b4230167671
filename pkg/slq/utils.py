def monus(a, b):
    """Truncated subtraction; never below zero."""
    return max(0, a - b)


def iter_unique(source, key=None):
    """Iter unique values of the given source, in order.

    :param key: Function deriving the key for each object.

    """
    seen = set()
    for x in source:
        k = key(x) if key else x
        if k in seen:
            continue
        seen.add(k)
        yield x


def set_partitions(items):
    """Iter all set partitions of the given sequence.

    Partitions come out as tuples of blocks (tuples), in the order of their
    restricted growth strings; blocks are ordered by their first member, and
    members keep the order of ``items``::

        >>> list(set_partitions('xy'))
        [(('x', 'y'),), (('x',), ('y',))]

    """
    items = tuple(items)
    if not items:
        yield ()
        return

    def grow(i, labels, count):
        if i == len(items):
            blocks = [[] for _ in range(count)]
            for item, label in zip(items, labels):
                blocks[label].append(item)
            yield tuple(tuple(b) for b in blocks)
            return
        for label in range(count + 1):
            labels.append(label)
            for x in grow(i + 1, labels, max(count, label + 1)):
                yield x
            labels.pop()

    for x in grow(0, [], 0):
        yield x

