from consola.comandos import ComandoConsola
from consola.services import MODOS


class Command(ComandoConsola):
    help = "Coproducto Δ de extracción (--left/--right) o δ de contracción (--contract)"
    comando = 'coproduct'

    def agregar_opciones(self, parser):
        parser.add_argument('--left', choices=MODOS, default='subset')
        parser.add_argument('--right', choices=MODOS, default='subset')
        parser.add_argument('--contract', choices=MODOS, help="Calcula δ del modo dado en lugar de Δ")

    def opciones_del_comando(self, options) -> dict:
        return {'left': options['left'], 'right': options['right'], 'contract': options['contract']}
