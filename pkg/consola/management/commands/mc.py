from consola.comandos import ComandoConsola
from consola.services import ACCIONES_MC


class Command(ComandoConsola):
    help = "Operaciones sobre multicomplejos"
    comando = 'mc'

    def add_arguments(self, parser):
        parser.add_argument('action', choices=ACCIONES_MC)
        super().add_arguments(parser)

    def opciones_del_comando(self, options) -> dict:
        return {'action': options['action']}
