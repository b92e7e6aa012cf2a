"""
Unit tests for the GenerateSyntheticInstance use case.
"""
from pathlib import Path
from unittest.mock import MagicMock

import pytest

from rotation_sync.application.dtos.synthesis_dto import SynthRequestDTO
from rotation_sync.application.use_cases.generate_synthetic_instance import GenerateSyntheticInstance


class TestGenerateSyntheticInstance:
    @pytest.fixture
    def mock_store(self):
        """Create a mock view graph store writing two files."""
        store = MagicMock()
        store.save_graph.return_value = [Path("g.txt"), Path("g.gt.txt")]
        return store

    @pytest.fixture
    def request_dto(self):
        return SynthRequestDTO(n=12, p=0.5, outliers=0.25, sigma_deg=2.0, seed=3, out_path=Path("g.txt"))

    def test_execute(self, mock_store, request_dto):
        """Test that the generated graph is saved and summarized."""
        # Arrange
        use_case = GenerateSyntheticInstance(mock_store)

        # Act
        response = use_case.execute(request_dto)

        # Assert
        mock_store.save_graph.assert_called_once()
        graph, path = mock_store.save_graph.call_args[0]
        assert path == Path("g.txt")
        assert graph.n == 12
        assert graph.ground_truth is not None
        assert response.graph_path == Path("g.txt")
        assert response.ground_truth_path == Path("g.gt.txt")
        assert response.n_edges == graph.edge_count
        assert response.n_outliers == sum(1 for edge in graph.edges if edge.is_outlier)
        assert response.edge_fraction == pytest.approx(graph.edge_fraction)

    def test_same_seed_same_graph(self, mock_store, request_dto):
        """Test that two executions with one seed save equal graphs."""
        # Arrange
        use_case = GenerateSyntheticInstance(mock_store)

        # Act
        use_case.execute(request_dto)
        use_case.execute(request_dto)

        # Assert
        first, second = (call[0][0] for call in mock_store.save_graph.call_args_list)
        assert first.edges == second.edges

    def test_single_file_store(self, request_dto):
        """Test that a store writing one file reports it for both paths."""
        # Arrange
        store = MagicMock()
        store.save_graph.return_value = [Path("g.npz")]

        # Act
        response = GenerateSyntheticInstance(store).execute(request_dto)

        # Assert
        assert response.ground_truth_path == Path("g.npz")
