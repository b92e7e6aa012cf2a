"""
View graph store that picks the file format from the path suffix.
"""
from pathlib import Path
from typing import List, Optional

from rotation_sync.adapters.storage.npz_view_graph_store import NpzViewGraphStore
from rotation_sync.adapters.storage.text_rotation_store import TextRotationStore
from rotation_sync.adapters.storage.text_view_graph_store import TextViewGraphStore
from rotation_sync.application.interfaces.view_graph_store_interface import ViewGraphStoreInterface
from rotation_sync.core.domain.entities.view_graph import ViewGraph

NPZ_SUFFIX = ".npz"


class SuffixDispatchingViewGraphStore:
    """``.npz`` paths go to the archive store, everything else to the text store."""

    def __init__(self, rotation_store: Optional[TextRotationStore] = None):
        rotation_store = rotation_store or TextRotationStore()
        self.text_store = TextViewGraphStore(rotation_store)
        self.npz_store = NpzViewGraphStore(rotation_store)

    def _store_for(self, path: Path) -> ViewGraphStoreInterface:
        if Path(path).suffix.lower() == NPZ_SUFFIX:
            return self.npz_store
        return self.text_store

    def ground_truth_path_for(self, path: Path) -> Path:
        return self._store_for(path).ground_truth_path_for(path)

    def save_graph(self, graph: ViewGraph, path: Path) -> List[Path]:
        return self._store_for(path).save_graph(graph, path)

    def load_graph(self, path: Path, ground_truth_path: Optional[Path] = None) -> ViewGraph:
        return self._store_for(path).load_graph(path, ground_truth_path)
