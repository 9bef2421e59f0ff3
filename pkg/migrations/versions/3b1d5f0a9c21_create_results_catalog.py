"""create_results_catalog

Revision ID: 3b1d5f0a9c21
Revises: 
Create Date: 2026-10-19 10:12:41.502113

"""
from typing import Sequence, Union

from alembic import op
import sqlalchemy as sa


# revision identifiers, used by Alembic.
revision: str = '3b1d5f0a9c21'
down_revision: Union[str, None] = None
branch_labels: Union[str, Sequence[str], None] = None
depends_on: Union[str, Sequence[str], None] = None


def upgrade() -> None:
    """Upgrade schema."""
    op.create_table('sweep_runs',
    sa.Column('controller_kind', sa.Enum('BASELINE', 'ARPS', name='controllerkindenum'), nullable=False),
    sa.Column('dt', sa.Float(), nullable=False),
    sa.Column('tool_version', sa.String(length=32), nullable=False),
    sa.Column('grid_size', sa.Integer(), nullable=False),
    sa.Column('reached_count', sa.Integer(), nullable=False),
    sa.Column('max_t_bar', sa.Float(), nullable=True),
    sa.Column('id', sa.Integer(), autoincrement=True, nullable=False),
    sa.Column('created_at', sa.DateTime(timezone=True), server_default=sa.text('(CURRENT_TIMESTAMP)'), nullable=False),
    sa.Column('updated_at', sa.DateTime(timezone=True), server_default=sa.text('(CURRENT_TIMESTAMP)'), nullable=False),
    sa.PrimaryKeyConstraint('id')
    )
    op.create_index(op.f('ix_sweep_runs_id'), 'sweep_runs', ['id'], unique=False)
    op.create_index(op.f('ix_sweep_runs_controller_kind'), 'sweep_runs', ['controller_kind'], unique=False)
    op.create_table('sweep_points',
    sa.Column('run_id', sa.Integer(), nullable=False),
    sa.Column('position', sa.Integer(), nullable=False),
    sa.Column('rho', sa.Float(), nullable=False),
    sa.Column('n', sa.Integer(), nullable=False),
    sa.Column('b', sa.Float(), nullable=False),
    sa.Column('t_bar', sa.Float(), nullable=True),
    sa.Column('status', sa.Enum('REACHED', 'HORIZON_EXCEEDED', 'FAULT', name='pointstatusenum'), nullable=False),
    sa.Column('id', sa.Integer(), autoincrement=True, nullable=False),
    sa.Column('created_at', sa.DateTime(timezone=True), server_default=sa.text('(CURRENT_TIMESTAMP)'), nullable=False),
    sa.Column('updated_at', sa.DateTime(timezone=True), server_default=sa.text('(CURRENT_TIMESTAMP)'), nullable=False),
    sa.ForeignKeyConstraint(['run_id'], ['sweep_runs.id'], ondelete='CASCADE'),
    sa.PrimaryKeyConstraint('id'),
    sa.UniqueConstraint('run_id', 'rho', 'n', 'b', name='uq_sweep_point')
    )
    op.create_index(op.f('ix_sweep_points_id'), 'sweep_points', ['id'], unique=False)
    op.create_index(op.f('ix_sweep_points_run_id'), 'sweep_points', ['run_id'], unique=False)
    op.create_table('scenario_runs',
    sa.Column('label', sa.String(length=16), nullable=False),
    sa.Column('sigma0_norm', sa.Float(), nullable=False),
    sa.Column('dt', sa.Float(), nullable=False),
    sa.Column('tool_version', sa.String(length=32), nullable=False),
    sa.Column('status', sa.String(length=32), nullable=False),
    sa.Column('t_bar', sa.Float(), nullable=True),
    sa.Column('max_norm_after_switch', sa.Float(), nullable=True),
    sa.Column('max_lambda', sa.Float(), nullable=True),
    sa.Column('passed', sa.Boolean(), nullable=False),
    sa.Column('id', sa.Integer(), autoincrement=True, nullable=False),
    sa.Column('created_at', sa.DateTime(timezone=True), server_default=sa.text('(CURRENT_TIMESTAMP)'), nullable=False),
    sa.Column('updated_at', sa.DateTime(timezone=True), server_default=sa.text('(CURRENT_TIMESTAMP)'), nullable=False),
    sa.PrimaryKeyConstraint('id')
    )
    op.create_index(op.f('ix_scenario_runs_id'), 'scenario_runs', ['id'], unique=False)
    op.create_index(op.f('ix_scenario_runs_label'), 'scenario_runs', ['label'], unique=False)


def downgrade() -> None:
    """Downgrade schema."""
    op.drop_index(op.f('ix_scenario_runs_label'), table_name='scenario_runs')
    op.drop_index(op.f('ix_scenario_runs_id'), table_name='scenario_runs')
    op.drop_table('scenario_runs')
    op.drop_index(op.f('ix_sweep_points_run_id'), table_name='sweep_points')
    op.drop_index(op.f('ix_sweep_points_id'), table_name='sweep_points')
    op.drop_table('sweep_points')
    op.drop_index(op.f('ix_sweep_runs_controller_kind'), table_name='sweep_runs')
    op.drop_index(op.f('ix_sweep_runs_id'), table_name='sweep_runs')
    op.drop_table('sweep_runs')
