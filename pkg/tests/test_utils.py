from . import *

from slq.utils import iter_unique, monus, set_partitions


class TestMonus(TestCase):

    def test_monus(self):
        self.assertEqual(monus(3, 1), 2)
        self.assertEqual(monus(1, 3), 0)
        self.assertEqual(monus(0, 0), 0)


class TestIterUnique(TestCase):

    def test_order(self):
        self.assertEqual(list(iter_unique('abacb')), ['a', 'b', 'c'])

    def test_key(self):
        self.assertEqual(list(iter_unique(['a', 'B', 'A', 'b'], key=str.lower)), ['a', 'B'])


class TestSetPartitions(TestCase):

    def test_bell_numbers(self):
        for n, bell in enumerate([1, 1, 2, 5, 15, 52]):
            self.assertEqual(len(list(set_partitions(range(n)))), bell)

    def test_canonical_order(self):
        self.assertEqual(list(set_partitions('xyz')), [
            (('x', 'y', 'z'), ),
            (('x', 'y'), ('z', )),
            (('x', 'z'), ('y', )),
            (('x', ), ('y', 'z')),
            (('x', ), ('y', ), ('z', )),
        ])

    def test_empty(self):
        self.assertEqual(list(set_partitions([])), [()])
