import sys

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from .services import run
from .tipos import ERROR_DE_ENTRADA, EXITO, FORMATOS, VERIFICACION_FALLIDA, JobSpec


class ComandoConsola(BaseCommand):
    """
    Base de los comandos de la consola: agrega las opciones comunes, arma el
    JobSpec y traduce el código de salida de run() a CommandError, salvo el
    contraejemplo de verify en la terminal, que termina con sys.exit(1).
    """

    comando = None
    requiere_entrada = True

    def add_arguments(self, parser):
        if self.requiere_entrada:
            parser.add_argument(
                'entrada',
                help="Archivo JSON, literal JSON o catalogo:<nombre>")
        parser.add_argument('--format', dest='formato', choices=FORMATOS, default='text', help="Formato de salida")
        parser.add_argument('--max-vertices', dest='max_vertices', type=int, help="Tope de vértices para este trabajo")
        parser.add_argument('--seed', type=int, help="Semilla (por defecto HIPERGRAFOS_SEMILLA)")
        parser.add_argument('--guardar', action='store_true', help="Registra el resultado en la base de datos")
        self.agregar_opciones(parser)

    def agregar_opciones(self, parser):
        pass

    def opciones_del_comando(self, options) -> dict:
        return {}

    def handle(self, *args, **options):
        try:
            job = JobSpec(
                command=self.comando,
                entrada=options.get('entrada'),
                opciones=self.opciones_del_comando(options),
                formato=options['formato'],
                max_vertices=options['max_vertices'],
                seed=options['seed'],
                guardar=options['guardar'])
        except ValidationError as e:
            raise CommandError('; '.join(e.messages), returncode=ERROR_DE_ENTRADA)

        codigo, salida, errores = run(job)
        if salida:
            self.stdout.write(salida)
        if codigo == VERIFICACION_FALLIDA:
            self.stderr.write(errores)
            # Desde la terminal stderr queda sólo con el contraejemplo en JSON
            if getattr(self, '_called_from_command_line', False):
                sys.exit(codigo)
            raise CommandError("La verificación encontró un contraejemplo", returncode=codigo)
        if codigo != EXITO:
            raise CommandError(errores, returncode=codigo)
